#include "ellwall/io.hpp"

#include "ellwall/error.hpp"

#include <fstream>
#include <sstream>

namespace ellwall {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorCode::Validation, msg); }

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) bad(where + ": missing field '" + key + "'");
  return j.at(key);
}

int int_field(const json& j, const char* key, const std::string& where) {
  const json& v = field(j, key, where);
  if (!v.is_number_integer()) bad(where + ": field '" + key + "' must be an integer");
  return v.get<int>();
}

json codim_json(const Codim& c) { return c ? json(to_string(*c)) : json("Empty"); }

}  // namespace

json to_json(const Rational& x) { return to_string(x); }

Rational rational_from_json(const json& j, const std::string& what) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      bad(what + ": " + e.what());
    }
  }
  bad(what + ": expected an integer or a \"p/q\" string");
}

Integer integer_from_json(const json& j, const std::string& what) {
  Rational x = rational_from_json(j, what);
  if (!is_integer(x)) bad(what + ": expected an integer, got " + to_string(x));
  return x.get_num();
}

json to_json(const QVector& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(to_json(v(i)));
  return a;
}

QVector vector_from_json(const json& j, const std::string& what) {
  if (!j.is_array()) bad(what + ": expected an array");
  QVector v(static_cast<Eigen::Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i)
    v(static_cast<Eigen::Index>(i)) =
        rational_from_json(j[i], what + "[" + std::to_string(i) + "]");
  return v;
}

json to_json(const SurfaceGeometry& s) {
  json j;
  j["g"] = s.g;
  j["e_chi"] = s.e_chi;
  j["multiple_fibers"] = s.multiple_fibers;
  j["ns_rank"] = s.ns_rank();
  json gram = json::array();
  for (Eigen::Index i = 0; i < s.gram.rows(); ++i) gram.push_back(to_json(QVector(s.gram.row(i).transpose())));
  j["gram"] = gram;
  j["f"] = to_json(s.f);
  j["H"] = to_json(s.H);
  if (s.sigma) j["sigma"] = to_json(*s.sigma);
  json fl = json::array();
  for (const auto& x : s.fiber_lattices) {
    json c = json::array();
    for (const auto& v : x.components) c.push_back(to_json(v));
    fl.push_back({{"fiber_id", x.fiber_id},
                  {"multiplicity", x.multiplicity},
                  {"components", c},
                  {"comp_multiplicities", x.comp_multiplicities}});
  }
  j["fiber_lattices"] = fl;
  if (s.h11) j["h11"] = *s.h11;
  j["kodaira_dim_one"] = s.kodaira_dim_one;
  return j;
}

SurfaceGeometry surface_from_json(const json& j) {
  const std::string w = "surface";
  if (!j.is_object()) bad("surface: expected a JSON object");
  SurfaceGeometry s;
  s.g = int_field(j, "g", w);
  s.e_chi = int_field(j, "e_chi", w);
  if (j.contains("multiple_fibers")) {
    const json& m = j.at("multiple_fibers");
    if (!m.is_array()) bad("surface: multiple_fibers must be an array");
    for (const auto& x : m) {
      if (!x.is_number_integer()) bad("surface: multiple_fibers entries must be integers");
      s.multiple_fibers.push_back(x.get<int>());
    }
  }
  const json& gram = field(j, "gram", w);
  if (!gram.is_array() || gram.empty()) bad("surface: gram must be a non-empty array of rows");
  const auto n = static_cast<Eigen::Index>(gram.size());
  s.gram = QMatrix(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    QVector row = vector_from_json(gram[static_cast<size_t>(i)], "gram[" + std::to_string(i) + "]");
    if (row.size() != n) bad("surface: gram row " + std::to_string(i) + " has wrong length");
    s.gram.row(i) = row.transpose();
  }
  if (j.contains("ns_rank") && int_field(j, "ns_rank", w) != n)
    bad("surface: ns_rank does not match the gram size");
  s.f = vector_from_json(field(j, "f", w), "f");
  s.H = vector_from_json(field(j, "H", w), "H");
  if (j.contains("sigma") && !j.at("sigma").is_null()) s.sigma = vector_from_json(j.at("sigma"), "sigma");
  if (j.contains("fiber_lattices")) {
    const json& fls = j.at("fiber_lattices");
    if (!fls.is_array()) bad("surface: fiber_lattices must be an array");
    for (size_t i = 0; i < fls.size(); ++i) {
      const json& x = fls[i];
      const std::string fw = "fiber_lattices[" + std::to_string(i) + "]";
      FiberComponentLattice fl;
      const json& id = field(x, "fiber_id", fw);
      fl.fiber_id = id.is_string() ? id.get<std::string>() : id.dump();
      fl.multiplicity = x.contains("multiplicity") ? int_field(x, "multiplicity", fw) : 1;
      const json& comps = field(x, "components", fw);
      if (!comps.is_array()) bad(fw + ": components must be an array");
      for (size_t c = 0; c < comps.size(); ++c)
        fl.components.push_back(vector_from_json(comps[c], fw + ".components[" + std::to_string(c) + "]"));
      if (x.contains("comp_multiplicities")) {
        for (const auto& a : x.at("comp_multiplicities")) {
          if (!a.is_number_integer()) bad(fw + ": comp_multiplicities must be integers");
          fl.comp_multiplicities.push_back(a.get<int>());
        }
      } else {
        fl.comp_multiplicities.assign(fl.components.size(), 1);
      }
      s.fiber_lattices.push_back(fl);
    }
  }
  if (j.contains("h11") && !j.at("h11").is_null()) s.h11 = int_field(j, "h11", w);
  if (j.contains("kodaira_dim_one")) {
    if (!j.at("kodaira_dim_one").is_boolean()) bad("surface: kodaira_dim_one must be a boolean");
    s.kodaira_dim_one = j.at("kodaira_dim_one").get<bool>();
  }
  validate(s);
  return s;
}

SurfaceGeometry load_surface(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open surface file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, path + ": " + e.what());
  }
  return surface_from_json(j);
}

namespace {

json scalar_json(const Rational& x) {
  if (is_integer(x) && x.get_num().fits_slong_p()) return x.get_num().get_si();
  return to_json(x);
}

}  // namespace

json to_json(const ChernVector& e) {
  return {{"r", scalar_json(e.r)}, {"xi", to_json(e.xi)}, {"a", scalar_json(e.a)}};
}

ChernVector chern_from_json(const json& j, int ns_rank) {
  ChernVector e;
  e.r = rational_from_json(field(j, "r", "chern"), "chern.r");
  e.a = rational_from_json(field(j, "a", "chern"), "chern.a");
  e.xi = vector_from_json(field(j, "xi", "chern"), "chern.xi");
  if (e.xi.size() != ns_rank)
    bad("chern.xi: expected " + std::to_string(ns_rank) + " coordinates");
  return e;
}

json to_json(const LambdaValue& v) {
  json j;
  j["value"] = v.infinite ? json("-inf") : to_json(v.value);
  if (v.slope_pair)
    j["slope_pair"] = {to_string(v.slope_pair->first), to_string(v.slope_pair->second)};
  return j;
}

LambdaValue lambda_from_json(const json& j) {
  if (j.is_object()) {
    if (!j.contains("value"))
      throw Error(ErrorCode::Parse, "lambda object needs a value");
    LambdaValue v = lambda_from_json(j.at("value"));
    if (j.contains("slope_pair")) {
      const json& sp = j.at("slope_pair");
      if (!sp.is_array() || sp.size() != 2)
        throw Error(ErrorCode::Parse, "slope_pair must have two entries");
      v.slope_pair = std::make_pair(integer_from_json(sp[0], "slope_pair"),
                                    integer_from_json(sp[1], "slope_pair"));
    }
    return v;
  }
  if (j.is_string() && (j.get<std::string>() == "-inf" || j.get<std::string>() == "inf"))
    return LambdaValue::minus_infinity();
  return LambdaValue::finite(rational_from_json(j, "lambda"));
}

json to_json(const Classification& c) {
  json j;
  j["kind"] = crossing_name(c.kind);
  if (c.kind == CrossingKind::Codim1) {
    j["case"] = c.crossing_case;
    j["projective"] = c.projective;
  }
  if (c.kind == CrossingKind::HigherCodim) j["d"] = to_string(c.d);
  return j;
}

json to_json(const IsotropicDecomposition& d) {
  json pf = json::array();
  for (const auto& b : d.per_fiber)
    pf.push_back({{"m", b.m},
                  {"r_i", to_string(b.r_i)},
                  {"d_i", to_string(b.d_i)},
                  {"p_i", to_string(b.p_i)},
                  {"k_i", to_string(b.k_i)}});
  json lf = json::array();
  for (const auto& x : d.l_fiber) lf.push_back(to_string(x));
  return {{"r_prime", to_string(d.r_prime)},
          {"d_prime", to_string(d.d_prime)},
          {"per_fiber", pf},
          {"l_fiber", lf},
          {"l", to_string(d.l)}};
}

json to_json(const WallLambda& w) {
  json j;
  j["kind"] = kind_name(w.kind);
  j["tau"] = to_json(w.tau);
  j["lambda"] = to_json(w.lambda);
  j["codim"] = codim_json(w.codim);
  j["classification"] = to_json(w.classification);
  j["delta"] = to_string(w.delta);
  if (w.decomposition) j["decomposition"] = to_json(*w.decomposition);
  if (w.kind == WallKind::Root && !w.fiber_id.empty()) {
    j["fiber_id"] = w.fiber_id;
    j["root_sign"] = w.root_sign;
    j["fiber_shift"] = to_string(w.fiber_shift);
  }
  if (w.fiber_index) {
    j["fiber_index"] = *w.fiber_index;
    j["fiber_shift"] = to_string(w.fiber_shift);
  }
  return j;
}

json to_json(const MoveDescriptor& m) {
  json j;
  j["tag"] = move_name(m.tag);
  j["target"] = to_json(m.target);
  if (m.codim) j["codim"] = to_string(*m.codim);
  if (!m.chain.empty()) {
    json c = json::array();
    for (const auto& x : m.chain) c.push_back(to_json(x));
    j["chain"] = c;
  }
  return j;
}

json to_json(const Wall1D& w) {
  json j;
  j["kind"] = kind_name(w.kind);
  j["u"] = to_json(w.u);
  j["codim"] = codim_json(w.codim);
  j["divisorial"] = w.divisorial;
  j["move"] = to_json(w.move);
  j["locus"] = w.locus;
  j["pairing"] = to_string(w.pairing);
  j["general_position"] = "assumed";
  if (w.kind == WallKind::Root) {
    j["fiber_id"] = w.fiber_id;
    j["root_sign"] = w.root_sign;
    j["root_coeffs"] = w.root_coeffs;
    j["fiber_shift"] = to_string(w.fiber_shift);
  }
  if (w.side) j["side"] = *w.side;
  return j;
}

json to_json(const ReductionCertificate& c) {
  json j;
  j["kind"] = reduction_name(c.kind);
  j["target"] = c.target ? to_json(*c.target) : json(nullptr);
  j["length_l"] = c.length_l ? json(to_string(*c.length_l)) : json(nullptr);
  j["chosen_pair"] = {to_string(c.chosen_pair.first), to_string(c.chosen_pair.second)};
  j["original_pair"] = {to_string(c.original_pair.first), to_string(c.original_pair.second)};
  j["used_dual_trick"] = c.used_dual_trick;
  j["fiber_degree_divisible"] = c.fiber_degree_divisible;
  j["irreducible_fibers"] = c.irreducible_fibers;
  json w = json::array();
  for (const auto& x : c.witnesses)
    w.push_back({{"test", x.test},
                 {"m", x.m},
                 {"lhs", to_string(x.lhs)},
                 {"rhs", to_string(x.rhs)},
                 {"holds", x.holds}});
  j["witnesses"] = w;
  json o = json::array();
  for (const auto& x : c.obstructions) o.push_back(to_json(x));
  j["obstructions"] = o;
  return j;
}

json to_json(const HodgePolynomial& h) {
  json j;
  json c = json::array();
  for (const auto& [pq, x] : h.h) c.push_back({pq.first, pq.second, to_string(x)});
  j["coefficients"] = c;
  j["euler"] = to_string(h.euler());
  j["total_rank"] = to_string(h.total_rank());
  return j;
}

json to_json(const RaySpec& r) {
  return {{"t", r.t.infinite ? json("-inf") : to_json(r.t.value)},
          {"kvector", to_json(r.kvector)},
          {"primitive", to_json(r.primitive)}};
}

json to_json(const ChamberInterval& c) {
  return {{"t1", c.t1.infinite ? json("-inf") : to_json(c.t1.value)},
          {"t2", to_json(c.t2)},
          {"n", c.n}};
}

}  // namespace ellwall
