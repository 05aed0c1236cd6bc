#include "rbl/io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

namespace rbl::io {

namespace {

const json& expect(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key))
    throw SchemaError(where + ": missing required key '" + key + "'");
  return j.at(key);
}

std::size_t parse_count(const json& j, const std::string& where) {
  if (!j.is_number_unsigned())
    throw SchemaError(where + ": expected a nonnegative integer");
  return j.get<std::size_t>();
}

std::vector<ConstantEntry> parse_triples(const json& j, std::size_t dim,
                                         const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + ": expected an array of entries");
  std::vector<ConstantEntry> out;
  for (std::size_t e = 0; e < j.size(); ++e) {
    const json& t = j[e];
    std::string at = where + "[" + std::to_string(e) + "]";
    if (!t.is_object()) throw SchemaError(at + ": expected {i,j,k,c}");
    ConstantEntry ce;
    ce.i = parse_count(expect(t, "i", at), at + ".i");
    ce.j = parse_count(expect(t, "j", at), at + ".j");
    ce.k = parse_count(expect(t, "k", at), at + ".k");
    ce.c = parse_rational_field(expect(t, "c", at), at + ".c");
    if (ce.i >= dim || ce.j >= dim || ce.k >= dim)
      throw SchemaError(at + ": index out of range for dim " + std::to_string(dim));
    out.push_back(std::move(ce));
  }
  return out;
}

std::vector<Matrix> parse_matrix_list(const json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + ": expected an array of matrices");
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(parse_matrix(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

Rational parse_rational_field(const json& j, const std::string& where) {
  if (j.is_number())
    throw SchemaError(where + ": numeric literals are not accepted, "
                              "write rationals as strings like \"3\" or \"1/2\"");
  if (!j.is_string()) throw SchemaError(where + ": expected a rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const SchemaError& e) {
    throw SchemaError(where + ": " + e.what());
  }
}

Matrix parse_matrix(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty())
    throw SchemaError(where + ": expected a non-empty array of rows");
  std::size_t rows = j.size(), cols = 0;
  for (std::size_t r = 0; r < rows; ++r)
    if (!j[r].is_array())
      throw SchemaError(where + ": row " + std::to_string(r) + " is not an array");
  cols = j[0].size();
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (j[r].size() != cols) throw SchemaError(where + ": ragged rows");
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = parse_rational_field(j[r][c], where + "[" + std::to_string(r) +
                                                  "][" + std::to_string(c) + "]");
  }
  return m;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json vec_to_json(const Vec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

json cochain_to_json(const CECochain& f) {
  json entries = json::array();
  for (std::size_t r = 0; r < f.values.size(); ++r) {
    if (is_zero(f.values[r])) continue;
    json e;
    e["indices"] = wedge_unrank(r, f.degree, f.g_dim);
    e["value"] = vec_to_json(f.values[r]);
    entries.push_back(std::move(e));
  }
  return entries;
}

CECochain cochain_from_json(const json& j, std::size_t degree, std::size_t g_dim,
                            std::size_t v_dim, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + ": expected an entry array");
  CECochain f = CECochain::zero(degree, g_dim, v_dim);
  for (std::size_t e = 0; e < j.size(); ++e) {
    std::string at = where + "[" + std::to_string(e) + "]";
    const json& idx = expect(j[e], "indices", at);
    const json& val = expect(j[e], "value", at);
    if (!idx.is_array() || idx.size() != degree)
      throw SchemaError(at + ".indices: expected " + std::to_string(degree) +
                        " strictly increasing indices");
    std::vector<std::size_t> tuple;
    for (const auto& x : idx) tuple.push_back(parse_count(x, at + ".indices"));
    for (std::size_t p = 0; p + 1 < tuple.size(); ++p)
      if (tuple[p] >= tuple[p + 1])
        throw SchemaError(at + ".indices: must be strictly increasing");
    if (!tuple.empty() && tuple.back() >= g_dim)
      throw SchemaError(at + ".indices: out of range");
    if (!val.is_array() || val.size() != v_dim)
      throw SchemaError(at + ".value: expected " + std::to_string(v_dim) +
                        " rational strings");
    Vec v(v_dim);
    for (std::size_t t = 0; t < v_dim; ++t)
      v[t] = parse_rational_field(val[t], at + ".value");
    f.at(tuple) = std::move(v);
  }
  return f;
}

json rb_cochain_to_json(const RBCochain& c) {
  json out;
  out["f"] = cochain_to_json(c.f);
  if (c.gpart) out["g"] = cochain_to_json(*c.gpart);
  return out;
}

Bundle parse_bundle(const json& doc) {
  if (!doc.is_object()) throw SchemaError("document: expected a JSON object");
  Bundle b;
  if (doc.contains("lie")) {
    const json& l = doc.at("lie");
    std::size_t dim = parse_count(expect(l, "dim", "lie"), "lie.dim");
    auto triples = parse_triples(expect(l, "bracket", "lie"), dim, "lie.bracket");
    b.lie = LieAlgebra::from_triples(dim, triples);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        if (!is_zero(b.lie->bracket_basis(i, j) + b.lie->bracket_basis(j, i)))
          throw SchemaError("lie.bracket: entries contradict antisymmetry at (" +
                            std::to_string(i) + "," + std::to_string(j) + ")");
  }
  if (doc.contains("assoc")) {
    const json& a = doc.at("assoc");
    std::size_t dim = parse_count(expect(a, "dim", "assoc"), "assoc.dim");
    b.assoc = AssociativeAlgebra::from_triples(
        dim, parse_triples(expect(a, "product", "assoc"), dim, "assoc.product"));
  }
  if (b.lie && b.assoc)
    throw SchemaError("document: give either 'lie' or 'assoc', not both");
  std::size_t alg_dim = b.lie ? b.lie->dim() : (b.assoc ? b.assoc->dim() : 0);
  if (doc.contains("rep")) {
    if (!b.lie) throw SchemaError("rep: requires a 'lie' section");
    const json& r = doc.at("rep");
    LieRepresentation rep;
    rep.module_dim = parse_count(expect(r, "module_dim", "rep"), "rep.module_dim");
    rep.rho = parse_matrix_list(expect(r, "matrices", "rep"), "rep.matrices");
    if (rep.rho.size() != alg_dim)
      throw SchemaError("rep.matrices: expected one matrix per generator");
    for (const auto& m : rep.rho)
      if (m.rows() != rep.module_dim || m.cols() != rep.module_dim)
        throw SchemaError("rep.matrices: entries must be module_dim x module_dim");
    b.rep = std::move(rep);
  }
  if (doc.contains("bimodule")) {
    if (!b.assoc) throw SchemaError("bimodule: requires an 'assoc' section");
    const json& m = doc.at("bimodule");
    Bimodule bim;
    bim.module_dim =
        parse_count(expect(m, "module_dim", "bimodule"), "bimodule.module_dim");
    bim.left = parse_matrix_list(expect(m, "left", "bimodule"), "bimodule.left");
    bim.right = parse_matrix_list(expect(m, "right", "bimodule"), "bimodule.right");
    if (bim.left.size() != alg_dim || bim.right.size() != alg_dim)
      throw SchemaError("bimodule: expected one matrix per generator on each side");
    b.bimodule = std::move(bim);
  }
  if (doc.contains("weight"))
    b.weight = parse_rational_field(doc.at("weight"), "weight");
  if (doc.contains("T")) b.T = parse_matrix(doc.at("T"), "T");
  if (doc.contains("calT")) b.calT = parse_matrix(doc.at("calT"), "calT");
  if (doc.contains("cocycle")) {
    if (!b.lie || !b.rep)
      throw SchemaError("cocycle: requires 'lie' and 'rep' sections");
    const json& c = doc.at("cocycle");
    Bundle::Cocycle coc{
        cochain_from_json(expect(c, "psi", "cocycle"), 2, alg_dim,
                          b.rep->module_dim, "cocycle.psi"),
        cochain_from_json(expect(c, "chi", "cocycle"), 1, alg_dim,
                          b.rep->module_dim, "cocycle.chi")};
    b.cocycle = std::move(coc);
  }
  if (doc.contains("deformation")) {
    if (!b.lie) throw SchemaError("deformation: requires a 'lie' section");
    const json& d = doc.at("deformation");
    Bundle::Deformation def;
    def.order = parse_count(expect(d, "order", "deformation"), "deformation.order");
    const json& terms = expect(d, "terms", "deformation");
    if (!terms.is_array() || terms.size() != def.order)
      throw SchemaError("deformation.terms: expected one entry per order 1..N");
    for (std::size_t n = 0; n < terms.size(); ++n) {
      std::string at = "deformation.terms[" + std::to_string(n) + "]";
      auto triples = parse_triples(expect(terms[n], "mu", at), alg_dim, at + ".mu");
      LieAlgebra holder = LieAlgebra::from_triples(alg_dim, triples);
      CECochain mu = CECochain::zero(2, alg_dim, alg_dim);
      for (std::size_t i = 0; i < alg_dim; ++i) {
        for (std::size_t j = 0; j < alg_dim; ++j)
          if (!is_zero(holder.bracket_basis(i, j) + holder.bracket_basis(j, i)))
            throw SchemaError(at + ".mu: entries contradict antisymmetry");
        for (std::size_t j = i + 1; j < alg_dim; ++j)
          mu.at({i, j}) = holder.bracket_basis(i, j);
      }
      def.mu.push_back(std::move(mu));
      def.T.push_back(parse_matrix(expect(terms[n], "T", at), at + ".T"));
    }
    b.deformation = std::move(def);
  }
  if (doc.contains("extension")) {
    const json& e = doc.at("extension");
    Bundle::Extension ext{parse_matrix(expect(e, "incl", "extension"), "extension.incl"),
                          parse_matrix(expect(e, "proj", "extension"), "extension.proj"),
                          parse_matrix(expect(e, "section", "extension"),
                                       "extension.section")};
    b.extension = std::move(ext);
  }
  if (doc.contains("base"))
    b.base = std::make_shared<Bundle>(parse_bundle(doc.at("base")));
  return b;
}

Bundle load_bundle(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open input file: " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
  return parse_bundle(doc);
}

WeightedRBLie require_rb_lie(const Bundle& b) {
  if (!b.lie) throw SchemaError("command needs a 'lie' section");
  if (!b.weight) throw SchemaError("command needs a 'weight'");
  if (!b.T) throw SchemaError("command needs a 'T' operator");
  if (b.T->rows() != b.lie->dim() || b.T->cols() != b.lie->dim())
    throw SchemaError("T: expected a dim x dim matrix");
  return {*b.lie, *b.weight, *b.T};
}

RBLieRepresentation require_rb_rep(const Bundle& b) {
  if (!b.rep) throw SchemaError("command needs a 'rep' section");
  if (!b.calT) throw SchemaError("command needs a 'calT' operator");
  if (b.calT->rows() != b.rep->module_dim || b.calT->cols() != b.rep->module_dim)
    throw SchemaError("calT: expected a module_dim x module_dim matrix");
  return {*b.rep, *b.calT};
}

PairedOperators require_paired(const Bundle& b) {
  WeightedRBLie rb = require_rb_lie(b);
  RBLieRepresentation rr = require_rb_rep(b);
  return {rb.g, rr.rep, rb.weight, rb.T, rr.calT};
}

WeightedRBAssoc require_rb_assoc(const Bundle& b) {
  if (!b.assoc) throw SchemaError("command needs an 'assoc' section");
  if (!b.weight) throw SchemaError("command needs a 'weight'");
  if (!b.T) throw SchemaError("command needs a 'T' operator");
  if (b.T->rows() != b.assoc->dim() || b.T->cols() != b.assoc->dim())
    throw SchemaError("T: expected a dim x dim matrix");
  return {*b.assoc, *b.weight, *b.T};
}

RBBimodule require_rb_bimodule(const Bundle& b) {
  if (!b.bimodule) throw SchemaError("command needs a 'bimodule' section");
  if (!b.calT) throw SchemaError("command needs a 'calT' operator");
  if (b.calT->rows() != b.bimodule->module_dim ||
      b.calT->cols() != b.bimodule->module_dim)
    throw SchemaError("calT: expected a module_dim x module_dim matrix");
  return {*b.bimodule, *b.calT};
}

TruncatedDeformation require_deformation(const Bundle& b) {
  WeightedRBLie rb = require_rb_lie(b);
  if (!b.deformation) throw SchemaError("command needs a 'deformation' section");
  TruncatedDeformation d;
  d.order = b.deformation->order;
  CECochain mu0 = CECochain::zero(2, rb.g.dim(), rb.g.dim());
  for (std::size_t i = 0; i < rb.g.dim(); ++i)
    for (std::size_t j = i + 1; j < rb.g.dim(); ++j)
      mu0.at({i, j}) = rb.g.bracket_basis(i, j);
  d.mu.push_back(std::move(mu0));
  d.T.push_back(rb.T);
  for (std::size_t n = 0; n < d.order; ++n) {
    d.mu.push_back(b.deformation->mu[n]);
    d.T.push_back(b.deformation->T[n]);
  }
  return d;
}

AbelianExtension require_extension(const Bundle& b, const WeightedRBLie& rb,
                                   const RBLieRepresentation& rrep) {
  WeightedRBLie total = require_rb_lie(b);
  if (!b.extension) throw SchemaError("command needs an 'extension' section");
  AbelianExtension ext{total, b.extension->incl, b.extension->proj,
                       b.extension->section};
  std::size_t g = rb.g.dim(), v = rrep.rep.module_dim, n = total.g.dim();
  if (n != g + v || ext.incl.rows() != n || ext.incl.cols() != v ||
      ext.proj.rows() != g || ext.proj.cols() != n || ext.section.rows() != n ||
      ext.section.cols() != g)
    throw SchemaError("extension: map shapes do not match the base structure");
  return ext;
}

json lie_to_json(const LieAlgebra& g) {
  json bracket = json::array();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j)
      for (std::size_t k = 0; k < g.dim(); ++k)
        if (g.c(i, j, k) != 0)
          bracket.push_back({{"i", i}, {"j", j}, {"k", k},
                             {"c", to_string(g.c(i, j, k))}});
  return {{"dim", g.dim()}, {"bracket", bracket}};
}

json rep_to_json(const LieRepresentation& r) {
  json mats = json::array();
  for (const auto& m : r.rho) mats.push_back(matrix_to_json(m));
  return {{"module_dim", r.module_dim}, {"matrices", mats}};
}

json extension_to_json(const WeightedRBLie& rb, const RBLieRepresentation& rrep,
                       const AbelianExtension& ext) {
  json doc;
  doc["lie"] = lie_to_json(ext.total.g);
  doc["weight"] = to_string(ext.total.weight);
  doc["T"] = matrix_to_json(ext.total.T);
  doc["extension"] = {{"incl", matrix_to_json(ext.incl)},
                      {"proj", matrix_to_json(ext.proj)},
                      {"section", matrix_to_json(ext.section)}};
  doc["base"] = {{"lie", lie_to_json(rb.g)},
                 {"rep", rep_to_json(rrep.rep)},
                 {"weight", to_string(rb.weight)},
                 {"T", matrix_to_json(rb.T)},
                 {"calT", matrix_to_json(rrep.calT)}};
  return doc;
}

}  // namespace rbl::io
