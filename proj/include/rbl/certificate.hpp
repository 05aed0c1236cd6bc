#ifndef RBL_CERTIFICATE_HPP
#define RBL_CERTIFICATE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "rbl/matrix.hpp"

namespace rbl {

/// Outcome of an identity check. On failure it carries the first violated
/// identity with the basis indices and the exact residual, enough to replay
/// the computation by hand.
struct Certificate {
  bool ok = true;
  std::string law;                   // which identity failed
  std::vector<std::size_t> indices;  // basis indices of the counterexample
  Vec residual;

  static Certificate pass() { return {}; }
  static Certificate fail(std::string law, std::vector<std::size_t> indices,
                          Vec residual) {
    return {false, std::move(law), std::move(indices), std::move(residual)};
  }

  explicit operator bool() const { return ok; }
  std::string message() const;
};

}  // namespace rbl

#endif
