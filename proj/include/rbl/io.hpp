#ifndef RBL_IO_HPP
#define RBL_IO_HPP

#include <memory>
#include <nlohmann/json_fwd.hpp>
#include <string>

#include "rbl/ext_deform.hpp"
#include "rbl/graded_lie.hpp"

namespace rbl::io {

using json = nlohmann::ordered_json;

/// One input document. A bundle may carry an algebra, a module, a weight,
/// operators, a cocycle, a deformation and an extension; commands pick the
/// sections they need. All scalars are rational strings ("p" or "p/q");
/// numeric literals are rejected.
struct Bundle {
  std::optional<LieAlgebra> lie;
  std::optional<AssociativeAlgebra> assoc;
  std::optional<LieRepresentation> rep;
  std::optional<Bimodule> bimodule;
  std::optional<Rational> weight;
  std::optional<Matrix> T;     // operator on the algebra (R on the assoc side)
  std::optional<Matrix> calT;  // operator on the module
  struct Cocycle {
    CECochain psi;  // degree 2
    CECochain chi;  // degree 1
  };
  std::optional<Cocycle> cocycle;
  struct Deformation {
    std::size_t order = 0;
    std::vector<CECochain> mu;  // orders 1..N
    std::vector<Matrix> T;
  };
  std::optional<Deformation> deformation;
  struct Extension {
    Matrix incl, proj, section;
  };
  std::optional<Extension> extension;  // total structure = bundle's lie/T
  std::shared_ptr<Bundle> base;        // base bundle of an extension document
};

Bundle parse_bundle(const json& doc);
Bundle load_bundle(const std::string& path);

Rational parse_rational_field(const json& j, const std::string& where);
Matrix parse_matrix(const json& j, const std::string& where);
json matrix_to_json(const Matrix& m);
json vec_to_json(const Vec& v);

/// {indices, value} entry list; unlisted basis tuples are zero.
json cochain_to_json(const CECochain& f);
CECochain cochain_from_json(const json& j, std::size_t degree, std::size_t g_dim,
                            std::size_t v_dim, const std::string& where);

json rb_cochain_to_json(const RBCochain& c);

/// Assembled views the CLI commands work with.
WeightedRBLie require_rb_lie(const Bundle& b);
RBLieRepresentation require_rb_rep(const Bundle& b);
PairedOperators require_paired(const Bundle& b);
WeightedRBAssoc require_rb_assoc(const Bundle& b);
RBBimodule require_rb_bimodule(const Bundle& b);
TruncatedDeformation require_deformation(const Bundle& b);
AbelianExtension require_extension(const Bundle& b, const WeightedRBLie& rb,
                                   const RBLieRepresentation& rrep);

json extension_to_json(const WeightedRBLie& rb, const RBLieRepresentation& rrep,
                       const AbelianExtension& ext);
json lie_to_json(const LieAlgebra& g);
json rep_to_json(const LieRepresentation& r);

}  // namespace rbl::io

#endif
