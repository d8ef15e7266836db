#include "ellwall/cli.hpp"

#include "ellwall/error.hpp"
#include "ellwall/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <sstream>

namespace ellwall {

namespace {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Output {
  json doc;
  Table table;
  int code = kOk;
};

void print_table(std::ostream& out, const Table& t) {
  std::vector<size_t> w(t.header.size(), 0);
  auto widen = [&](const std::vector<std::string>& r) {
    for (size_t i = 0; i < r.size() && i < w.size(); ++i) w[i] = std::max(w[i], r[i].size());
  };
  widen(t.header);
  for (const auto& r : t.rows) widen(r);
  auto line = [&](const std::vector<std::string>& r) {
    std::string s;
    for (size_t i = 0; i < r.size(); ++i) {
      if (i) s += "  ";
      s += r[i];
      if (i + 1 < r.size()) s += std::string(w[i] - r[i].size(), ' ');
    }
    out << s << '\n';
  };
  line(t.header);
  std::vector<std::string> rule;
  for (size_t x : w) rule.push_back(std::string(x, '-'));
  line(rule);
  for (const auto& r : t.rows) line(r);
}

void print_tsv(std::ostream& out, const Table& t) {
  auto line = [&](const std::vector<std::string>& r) {
    for (size_t i = 0; i < r.size(); ++i) out << (i ? "\t" : "") << r[i];
    out << '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
}

std::string vec_str(const QVector& v) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v(i));
  return s + "]";
}

std::string chern_str(const ChernVector& e) {
  return "(" + to_string(e.r) + "," + vec_str(e.xi) + "," + to_string(e.a) + ")";
}

std::string codim_str(const Codim& c) { return c ? to_string(*c) : "Empty"; }

std::string classification_str(const Classification& c) {
  std::string s = crossing_name(c.kind);
  if (c.kind == CrossingKind::Codim1)
    s += "(" + c.crossing_case + (c.projective ? ",projective" : ",non-projective") + ")";
  if (c.kind == CrossingKind::HigherCodim) s += "(" + to_string(c.d) + ")";
  return s;
}

json parse_json_arg(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, what + ": " + e.what());
  }
}

ChernVector chern_arg(const std::string& text, const SurfaceGeometry& s) {
  ChernVector e = chern_from_json(parse_json_arg(text, "--chern"), s.ns_rank());
  if (!e.is_integral()) throw Error(ErrorCode::Validation, "chern vector must be integral");
  return e;
}

QVector vector_arg(const std::string& text, const SurfaceGeometry& s, const std::string& what) {
  QVector v = vector_from_json(parse_json_arg(text, what), what);
  if (v.size() != s.ns_rank())
    throw Error(ErrorCode::Validation, what + ": expected " + std::to_string(s.ns_rank()) + " coordinates");
  return v;
}

Polarization polarization_arg(const SurfaceGeometry& s, const std::string& H, const std::string& alpha) {
  QVector h = H.empty() ? s.H : vector_arg(H, s, "--H");
  QVector a = alpha.empty() ? QVector(QVector::Zero(s.ns_rank())) : vector_arg(alpha, s, "--alpha");
  return make_polarization(s, h, a);
}

Output cmd_validate(const SurfaceGeometry& s) {
  Output o;
  o.doc["valid"] = true;
  o.doc["surface"] = to_json(s);
  o.doc["canonical_class"] = to_json(canonical_class(s));
  o.doc["p_g"] = s.p_g();
  json roots = json::object();
  for (const auto& fl : s.fiber_lattices) {
    json r = json::array();
    for (const auto& x : enumerate_fiber_roots(s, fl.fiber_id))
      r.push_back({{"D", to_json(x.D)}, {"coeffs", x.coeffs}, {"sign", x.sign}});
    roots[fl.fiber_id] = r;
  }
  o.doc["fiber_roots"] = roots;
  o.table.header = {"field", "value"};
  o.table.rows = {{"valid", "true"},
                  {"g", std::to_string(s.g)},
                  {"e_chi", std::to_string(s.e_chi)},
                  {"p_g", std::to_string(s.p_g())},
                  {"ns_rank", std::to_string(s.ns_rank())},
                  {"canonical_class", vec_str(canonical_class(s))}};
  for (const auto& fl : s.fiber_lattices)
    o.table.rows.push_back({"roots[" + fl.fiber_id + "]",
                            std::to_string(enumerate_fiber_roots(s, fl.fiber_id).size())});
  return o;
}

Output cmd_pairing(const SurfaceGeometry& s, const std::string& e1s, const std::string& e2s) {
  ChernVector e1 = chern_from_json(parse_json_arg(e1s, "--e1"), s.ns_rank());
  ChernVector e2 = chern_from_json(parse_json_arg(e2s, "--e2"), s.ns_rank());
  Output o;
  Rational x = euler_pairing(s, e1, e2), y = euler_pairing(s, e2, e1);
  o.doc = {{"e1", to_json(e1)}, {"e2", to_json(e2)}, {"chi", to_json(x)}, {"chi_reverse", to_json(y)}};
  o.table.header = {"e1", "e2", "chi(e1,e2)", "chi(e2,e1)"};
  o.table.rows = {{chern_str(e1), chern_str(e2), to_string(x), to_string(y)}};
  return o;
}

Output cmd_dim(const SurfaceGeometry& s, const ChernVector& e) {
  Output o;
  o.doc["chern"] = to_json(e);
  o.doc["chi_ee"] = to_json(euler_pairing(s, e, e));
  o.doc["ktheory_hyperplane_rank"] = ktheory_hyperplane_rank(s, e);
  o.table.header = {"quantity", "value"};
  o.table.rows.push_back({"chi(e,e)", to_string(euler_pairing(s, e, e))});
  Integer dim;
  if (e.r == 0) {
    dim = dim_moduli_1dim(s, e);
    o.doc["dim_moduli"] = to_string(dim);
    o.table.rows.push_back({"dim_moduli_1dim", to_string(dim)});
  } else {
    dim = dim_stack_lambda(s, e);
    Rational B = bogomolov_defect(s, e);
    o.doc["dim_stack"] = to_string(dim);
    o.doc["dim_moduli"] = to_string(dim + 1);
    o.doc["bogomolov_defect"] = to_json(B);
    o.table.rows.push_back({"dim_stack_lambda", to_string(dim)});
    o.table.rows.push_back({"dim_moduli", to_string(dim + 1)});
    o.table.rows.push_back({"bogomolov_defect", to_string(B)});
    try {
      Integer l = hilb_length(s, e);
      o.doc["hilb_length"] = to_string(l);
      o.table.rows.push_back({"hilb_length", to_string(l)});
    } catch (const Error& err) {
      o.doc["hilb_length"] = nullptr;
      o.doc["hilb_length_error"] = code_name(err.code());
    }
    if (B < 0) o.code = kInfeasible;
  }
  o.table.rows.push_back({"ktheory_hyperplane_rank", std::to_string(ktheory_hyperplane_rank(s, e))});
  o.doc["empty"] = dim < 0;
  if (dim < 0) o.code = kInfeasible;
  return o;
}

Output cmd_walls1d(const SurfaceGeometry& s, const ChernVector& e, const std::optional<Polarization>& p) {
  Output o;
  json walls = json::array();
  o.table.header = {"kind", "u", "codim", "divisorial", "move", "target"};
  if (p) o.table.header.push_back("side");
  for (const auto& w : enumerate_wall_classes_1d(s, e, p)) {
    walls.push_back(to_json(w));
    std::vector<std::string> row = {kind_name(w.kind), chern_str(w.u), codim_str(w.codim),
                                    w.divisorial ? "yes" : "no", move_name(w.move.tag),
                                    chern_str(w.move.target)};
    if (p) row.push_back(w.side ? *w.side : "");
    o.table.rows.push_back(row);
  }
  o.doc["chern"] = to_json(e);
  o.doc["walls"] = walls;
  o.doc["dim_moduli"] = to_string(dim_moduli_1dim(s, e));
  return o;
}

Output cmd_walls_lambda(const SurfaceGeometry& s, const ChernVector& e, const Polarization& p,
                        const LambdaValue& lambda0, const std::optional<LambdaValue>& lambda_min) {
  Output o;
  require_coprime_rank(s, e);
  Rational B = bogomolov_defect(s, e);
  auto walls = enumerate_walls_lambda(s, e, p, lambda0, lambda_min);
  json arr = json::array();
  o.table.header = {"lambda", "kind", "tau", "codim", "classification"};
  for (const auto& w : walls) {
    arr.push_back(to_json(w));
    o.table.rows.push_back({to_string(w.lambda), kind_name(w.kind), chern_str(w.tau),
                            codim_str(w.codim), classification_str(w.classification)});
  }
  o.doc["chern"] = to_json(e);
  o.doc["lambda0"] = to_json(lambda0);
  o.doc["lambda_min"] = to_json(lambda_min ? *lambda_min : LambdaValue::minus_infinity());
  o.doc["threshold"] = to_json(lambda_threshold(s, e, p));
  o.doc["alpha"] = to_json(p.alpha_original);
  o.doc["alpha_normalized"] = to_json(p.alpha);
  o.doc["bogomolov_defect"] = to_json(B);
  o.doc["walls"] = arr;
  o.doc["gieseker_threshold"] = walls.empty() ? json(nullptr) : to_json(walls.back().lambda);
  o.doc["codim_index_set"] =
      "nonzero tuples 0<=l_i<k_i, l>=0 with Bogomolov-feasible complement";
  if (B < 0) o.code = kInfeasible;
  return o;
}

Output cmd_reduce(const SurfaceGeometry& s, const ChernVector& e) {
  Output o;
  ReductionCertificate c = reduction_certificate(s, e);
  o.doc = to_json(c);
  o.doc["chern"] = to_json(e);
  o.table.header = {"field", "value"};
  o.table.rows = {{"kind", reduction_name(c.kind)},
                  {"chosen_pair", "(" + to_string(c.chosen_pair.first) + "," + to_string(c.chosen_pair.second) + ")"},
                  {"used_dual_trick", c.used_dual_trick ? "yes" : "no"},
                  {"length_l", c.length_l ? to_string(*c.length_l) : "undefined"},
                  {"target", c.target ? chern_str(*c.target) : "undefined"}};
  for (const auto& w : c.witnesses)
    o.table.rows.push_back({"witness " + w.test + " m=" + std::to_string(w.m),
                            to_string(w.lhs) + (w.holds ? " > " : " <= ") + to_string(w.rhs)});
  for (const auto& w : c.obstructions)
    o.table.rows.push_back({"obstruction", chern_str(w.tau) + " at " + to_string(w.lambda)});
  return o;
}

Output cmd_special(int l, const std::optional<Rational>& t, const std::optional<SurfaceGeometry>& s) {
  Output o;
  auto walls = walls_I0(l);
  auto chambers = chambers_I0(l);
  json wj = json::array();
  for (const auto& w : walls) wj.push_back(to_json(w));
  json cj = json::array();
  for (const auto& c : chambers) cj.push_back(to_json(c));
  o.doc["l"] = l;
  o.doc["walls"] = wj;
  o.doc["chambers"] = cj;
  o.table.header = {"kind", "t1", "t2", "label"};
  for (const auto& w : walls) o.table.rows.push_back({"wall", to_string(w), to_string(w), ""});
  for (size_t i = 0; i < chambers.size(); ++i)
    o.table.rows.push_back({"chamber", to_string(chambers[i].t1), to_string(chambers[i].t2),
                            "C" + std::to_string(i)});
  if (t) {
    IntervalIndex ix = interval_index(*t);
    json tj;
    tj["t"] = to_json(*t);
    tj["interval"] = to_string(ix);
    if (!ix.boundary) {
      auto [x, word] = normalize_to_I0(*t);
      json wd = json::array();
      std::string ws;
      for (auto n : word) {
        wd.push_back(normalization_name(n));
        ws += std::string(ws.empty() ? "" : ",") + normalization_name(n);
      }
      tj["normalized"] = to_json(x);
      tj["word"] = wd;
      o.table.rows.push_back({"normalize", to_string(*t), to_string(x), ws});
    }
    o.doc["normalization"] = tj;
  }
  if (s && s->kodaira_dim_one) {
    require_special_surface(*s);
    auto mov = movable_cone(*s, l);
    o.doc["movable_cone"] = {to_json(mov.first), to_json(mov.second)};
    json nef = json::array();
    for (size_t i = 0; i < chambers.size(); ++i) {
      auto c = nef_cone(*s, chambers[i], l);
      nef.push_back({{"chamber", to_json(chambers[i])}, {"rays", {to_json(c.first), to_json(c.second)}}});
      o.table.rows.push_back({"nef_ray", to_string(chambers[i].t1), to_string(chambers[i].t2),
                              "C" + std::to_string(i) + ":" + chern_str(c.first.primitive) + ";" +
                                  chern_str(c.second.primitive)});
    }
    o.doc["nef_cones"] = nef;
    o.table.rows.push_back({"movable_ray", "-inf", "-2",
                            chern_str(mov.first.primitive) + ";" + chern_str(mov.second.primitive)});
  }
  return o;
}

Output cmd_hodge(const SurfaceGeometry& s, std::optional<int> n, const std::optional<ChernVector>& e) {
  Output o;
  int len = 0;
  if (e) {
    Integer l = hilb_length(s, *e);
    o.doc["chern"] = to_json(*e);
    o.doc["hilb_length"] = to_string(l);
    if (!l.fits_sint_p()) throw Error(ErrorCode::Validation, "length too large");
    len = static_cast<int>(l.get_si());
  } else {
    o.doc["n"] = *n;
    len = *n;
  }
  // Hilb^n x Pic0
  const HodgePolynomial hilb = hodge_poly_hilb(s, len);
  const HodgePolynomial pic0 = hodge_poly_pic0(s);
  const HodgePolynomial h = hilb * pic0;
  o.doc["hilb"] = to_json(hilb);
  o.doc["pic0"] = to_json(pic0);
  o.doc["hodge"] = to_json(h);
  o.table.header = {"p", "q", "h^{p,q}"};
  for (const auto& [pq, x] : h.h)
    o.table.rows.push_back({std::to_string(pq.first), std::to_string(pq.second), to_string(x)});
  return o;
}

int infeasible_code(ErrorCode c) {
  return c == ErrorCode::NegativeLength ? kInfeasible : kUsage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Walls, chambers and reduction certificates for moduli on elliptic surfaces", "ellwall"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "json, table or tsv")
      ->check(CLI::IsMember({"json", "table", "tsv"}));

  std::string surface, chern, e1, e2, H, alpha, lambda0, lambda_min, tstr;
  int l = 0, n = -1;

  auto* validate_cmd = app.add_subcommand("validate", "validate a surface description");
  validate_cmd->add_option("surface", surface, "surface JSON file")->required();

  auto* pairing_cmd = app.add_subcommand("pairing", "Euler pairing chi(e1,e2)");
  pairing_cmd->add_option("--surface", surface)->required();
  pairing_cmd->add_option("--e1", e1)->required();
  pairing_cmd->add_option("--e2", e2)->required();

  auto* dim_cmd = app.add_subcommand("dim", "dimensions, Bogomolov defect, Hilbert length");
  dim_cmd->add_option("--surface", surface)->required();
  dim_cmd->add_option("--chern", chern)->required();

  auto* w1_cmd = app.add_subcommand("walls1d", "walls for (0, xi, a) with (xi.f) = 1");
  w1_cmd->add_option("--surface", surface)->required();
  w1_cmd->add_option("--chern", chern)->required();
  w1_cmd->add_option("--H", H, "polarization, JSON coordinate array");
  w1_cmd->add_option("--alpha", alpha, "twist, JSON coordinate array");

  auto* wl_cmd = app.add_subcommand("walls-lambda", "walls on the lambda line");
  wl_cmd->add_option("--surface", surface)->required();
  wl_cmd->add_option("--chern", chern)->required();
  wl_cmd->add_option("--lambda0", lambda0)->required();
  wl_cmd->add_option("--lambda-min", lambda_min);
  wl_cmd->add_option("--H", H);
  wl_cmd->add_option("--alpha", alpha);

  auto* red_cmd = app.add_subcommand("reduce", "reduction certificate to Hilb x Pic0");
  red_cmd->add_option("--surface", surface)->required();
  red_cmd->add_option("--chern", chern)->required();

  auto* sp_cmd = app.add_subcommand("special", "NS = ZH + Zf special case");
  sp_cmd->add_option("--l", l)->required();
  sp_cmd->add_option("--t", tstr);
  sp_cmd->add_option("--surface", surface);

  auto* h_cmd = app.add_subcommand("hodge", "Hodge polynomials of Hilb^n x Pic0");
  h_cmd->add_option("--surface", surface)->required();
  auto* n_opt = h_cmd->add_option("--n", n);
  auto* c_opt = h_cmd->add_option("--chern", chern);
  n_opt->excludes(c_opt);

  for (auto* c : app.get_subcommands({})) c->fallthrough();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << json{{"error", "UsageError"}, {"message", e.what()}}.dump() << '\n';
    return kUsage;
  }

  Output o;
  try {
    if (*validate_cmd) {
      o = cmd_validate(load_surface(surface));
    } else if (*pairing_cmd) {
      o = cmd_pairing(load_surface(surface), e1, e2);
    } else if (*dim_cmd) {
      SurfaceGeometry s = load_surface(surface);
      o = cmd_dim(s, chern_arg(chern, s));
    } else if (*w1_cmd) {
      SurfaceGeometry s = load_surface(surface);
      std::optional<Polarization> p;
      if (!H.empty() || !alpha.empty()) p = polarization_arg(s, H, alpha);
      o = cmd_walls1d(s, chern_arg(chern, s), p);
    } else if (*wl_cmd) {
      SurfaceGeometry s = load_surface(surface);
      std::optional<LambdaValue> lo;
      if (!lambda_min.empty()) lo = lambda_from_json(json(lambda_min));
      o = cmd_walls_lambda(s, chern_arg(chern, s), polarization_arg(s, H, alpha),
                           lambda_from_json(json(lambda0)), lo);
    } else if (*red_cmd) {
      SurfaceGeometry s = load_surface(surface);
      o = cmd_reduce(s, chern_arg(chern, s));
    } else if (*sp_cmd) {
      std::optional<Rational> t;
      if (!tstr.empty()) t = parse_rational(tstr);
      std::optional<SurfaceGeometry> s;
      if (!surface.empty()) s = load_surface(surface);
      o = cmd_special(l, t, s);
    } else if (*h_cmd) {
      SurfaceGeometry s = load_surface(surface);
      if (chern.empty() && n < 0) throw Error(ErrorCode::Validation, "hodge needs --n or --chern");
      std::optional<ChernVector> e;
      if (!chern.empty()) e = chern_arg(chern, s);
      o = cmd_hodge(s, e ? std::nullopt : std::optional<int>(n), e);
    }
  } catch (const Error& e) {
    err << json{{"error", code_name(e.code())}, {"message", e.what()}}.dump() << '\n';
    return infeasible_code(e.code());
  }

  if (format == "json")
    out << o.doc.dump(2) << '\n';
  else if (format == "table")
    print_table(out, o.table);
  else
    print_tsv(out, o.table);
  return o.code;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace ellwall
