// Command-line front end: every library operation behind a subcommand, all
// results as deterministic JSON on stdout (stable key order, exact values
// with advisory float companions). Exit codes: 0 success, 2 argument error,
// 3 domain error (bad mathematical input), 4 internal-consistency failure.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "k3/arith.hpp"
#include "k3/classify.hpp"
#include "k3/counting.hpp"
#include "k3/cubic.hpp"
#include "k3/fricke.hpp"
#include "k3/fricke_group.hpp"
#include "k3/gamma0.hpp"
#include "k3/mukai.hpp"
#include "k3/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace k3;

json j_rational(const Rational& x) { return json{{"num", x.num}, {"den", x.den}}; }

json j_surd(const Surd& x) {
  return json{{"a", j_rational(x.a)},
              {"b", j_rational(x.b)},
              {"radicand", x.radicand},
              {"approx", x.approx()}};
}

json j_vector(const MukaiVector& v) { return json::array({v.r, v.d, v.s}); }

json j_hpoint(const HPoint& z) {
  switch (z.kind) {
    case HPoint::Kind::CuspInfinity:
      return json{{"kind", "cusp"}, {"value", "oo"}};
    case HPoint::Kind::CuspFinite:
      return json{{"kind", "cusp"}, {"value", j_rational(z.re)}, {"approx", z.re.approx()}};
    case HPoint::Kind::Interior: {
      const double im =
          z.im_coeff.approx() * std::sqrt(static_cast<double>(z.im_radicand));
      return json{{"kind", "interior"},
                  {"re", j_rational(z.re)},
                  {"im_coeff", j_rational(z.im_coeff)},
                  {"im_radicand", z.im_radicand},
                  {"approx", json{{"re", z.re.approx()}, {"im", im}}}};
    }
  }
  throw InternalError("unreachable HPoint kind");
}

json j_matrix3(const LatticeIsometry& M) {
  json rows = json::array();
  for (const auto& row : M.m) rows.push_back(json::array({row[0], row[1], row[2]}));
  return rows;
}

json j_element(const FrickeElement& g) {
  return json{{"n", g.n},
              {"matrix", json::array({g.p, g.q, g.r, g.s})},
              {"det", g.tag == DetTag::Fricke ? "n" : "1"}};
}

json j_factors(const FreeProductPresentation& pres) {
  json out = json::array();
  for (const auto& f : pres.factors)
    out.push_back(json{{"kind", factor_kind_name(f.kind)}, {"mult", f.multiplicity}});
  return out;
}

int emit(const std::string& command, const json& input, const json& output) {
  json doc{{"command", command}, {"input", input}, {"output", output}};
  std::cout << doc.dump(2) << "\n";
  return 0;
}

int run_invariants(int64_t n, bool fricke) {
  InvariantTable t = gamma0_invariants(n);
  json out{{"n", t.n},      {"mu", t.mu},         {"nu2", t.nu2},
           {"nu3", t.nu3},  {"nu_inf", t.nu_inf}, {"genus", t.genus}};
  if (fricke) {
    FrickeTable f = fricke_invariants(n);
    out["xi"] = f.xi;
    out["nu2_plus"] = f.nu2_plus;
    out["nu3_plus"] = f.nu3_plus;
    out["nu4_plus"] = f.nu4_plus;
    out["nu6_plus"] = f.nu6_plus;
    out["nu_inf_plus"] = f.nu_inf_plus;
    out["genus_plus"] = f.genus_plus;
    out["minus_two_points"] =
        json{{"count", f.minus_two.count}, {"orders", f.minus_two.orders}};
  }
  return emit("invariants", json{{"n", n}, {"fricke", fricke}}, out);
}

int run_count(int64_t degree, const std::string& mode) {
  json input{{"degree", degree}, {"mode", mode}};
  if (mode == "involutions") {
    return emit("count", input,
                json{{"degree", degree},
                     {"involution_classes", count_involution_classes(degree)}});
  }
  SubgroupCount c = count_subgroups_mod2(degree);
  json shapes = json::array();
  for (MaximalShape s : c.maximal_shapes) shapes.push_back(maximal_shape_name(s));
  return emit("count", input,
              json{{"degree", c.degree},
                   {"involution_classes", c.involution_classes},
                   {"z2_mod2_classes", c.z2_mod2_classes},
                   {"z3_mod2_classes", c.z3_mod2_classes},
                   {"maximal_shapes", shapes},
                   {"times_shift_z2", c.times_shift_z2}});
}

int run_presentation(int64_t n, const std::string& group) {
  PresentationTarget which = group == "pi1orb"  ? PresentationTarget::Pi1OrbQ0
                             : group == "fricke" ? PresentationTarget::FrickeGroup
                                                 : PresentationTarget::AutsMod2;
  FreeProductPresentation pres = presentation(n, which);
  return emit("presentation", json{{"n", n}, {"group", group}},
              json{{"n", n},
                   {"group", group},
                   {"factors", j_factors(pres)},
                   {"iota_quotient", pres.iota_quotient}});
}

int run_classify(int64_t n, const std::vector<int64_t>& mat, const std::string& det) {
  DetTag tag = det == "n" ? DetTag::Fricke : DetTag::Unit;
  FrickeElement g = FrickeElement::make(n, mat[0], mat[1], mat[2], mat[3], tag);
  json input{{"n", n}, {"matrix", mat}, {"det", det}};
  require(!g.is_identity(), "classify: identity element has no type");

  TraceClass tc = trace_class(g);
  json out{{"element", j_element(g)}, {"trace_squared", j_rational(tc.trace_squared)}};

  PolychotomyResult res = classify_element(g);
  if (const auto* fo = std::get_if<FiniteOrder>(&res)) {
    out["type"] = "FiniteOrder";
    out["order"] = fo->order;
    out["fixed_point"] = j_hpoint(fo->point);
  } else if (const auto* mt = std::get_if<MinusTwoReducible>(&res)) {
    out["type"] = "MinusTwoReducible";
    out["delta"] = j_vector(mt->delta);
  } else if (const auto* zr = std::get_if<ZeroReducible>(&res)) {
    out["type"] = "ZeroReducible";
    out["w"] = j_vector(zr->w);
    CuspStabilizer st = cusp_stabilizer(n, zr->w);
    out["cusp"] = j_hpoint(st.cusp);
    out["stabilizer_generator"] = j_element(st.generator);
    out["kernel"] = st.kernel;
  } else if (const auto* pa = std::get_if<PseudoAnosov>(&res)) {
    out["type"] = "PseudoAnosov";
    out["spectral_radius"] = j_surd(pa->spectral_radius);
  } else {
    const auto& em = std::get<EllipticAtMinusTwoPoint>(res);
    out["type"] = "EllipticAtMinusTwoPoint";
    out["order"] = em.order;
    out["delta"] = j_vector(em.delta);
  }
  return emit("classify", input, out);
}

int run_cubic(int64_t degree) {
  CubicVerdict v = cubic_verdict(degree);
  return emit("cubic", json{{"degree", degree}},
              json{{"degree", v.degree},
                   {"hassett_nonempty", v.hassett_nonempty},
                   {"k3_divisibility", v.k3_divisibility},
                   {"has_associated_cubic", v.has_associated_cubic},
                   {"nu3", v.nu3},
                   {"special_nodal_degree_2", v.special_nodal_degree_2}});
}

int run_class_number(int64_t d) {
  return emit("class-number", json{{"d", d}}, json{{"d", d}, {"h", class_number(d)}});
}

int run_twist_matrix(int64_t n, const std::vector<int64_t>& delta) {
  if (!delta.empty()) {
    MukaiVector v(n, delta[0], delta[1], delta[2]);
    LatticeIsometry R = reflection(v);
    return emit("twist-matrix", json{{"n", n}, {"delta", delta}},
                json{{"delta", j_vector(v)},
                     {"square", square(v)},
                     {"matrix", j_matrix3(R)},
                     {"det", R.det()}});
  }
  // Standard pair: tensoring by the ample generator (a parabolic unit
  // element) and the spherical twist along (1, 0, 1) (the reflection whose
  // half-plane shadow is the Fricke involution).
  LatticeIsometry tensor = induced_isometry(FrickeElement::make(n, 1, 1, 0, 1, DetTag::Unit));
  LatticeIsometry twist = reflection(MukaiVector(n, 1, 0, 1));
  return emit("twist-matrix", json{{"n", n}},
              json{{"tensor_line_bundle", json{{"matrix", j_matrix3(tensor)}, {"det", tensor.det()}}},
                   {"twist_structure_sheaf", json{{"matrix", j_matrix3(twist)}, {"det", twist.det()}}}});
}

int run_verify(int64_t max_n) {
  std::vector<SweepResult> sweeps = run_sweeps(max_n);
  json rows = json::array();
  for (const auto& s : sweeps)
    rows.push_back(json{{"name", s.name}, {"checked", s.checked}, {"failures", s.failures}});
  const bool ok = all_passed(sweeps);
  emit("verify", json{{"max_n", max_n}},
       json{{"max_n", max_n}, {"sweeps", rows}, {"all_passed", ok}});
  if (!ok) {
    std::cerr << "error: consistency sweep reported failures\n";
    return 4;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants of derived automorphisms of generic K3 surfaces"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  int64_t inv_n = 1;
  bool inv_fricke = false;
  auto* sub_inv = app.add_subcommand("invariants", "Modular curve invariants for level n");
  sub_inv->add_option("--n", inv_n, "Level n >= 1")->required();
  sub_inv->add_flag("--fricke", inv_fricke, "Append the Fricke quotient table");

  int64_t count_degree = 2;
  std::string count_mode = "involutions";
  auto* sub_count = app.add_subcommand("count", "Conjugacy class counts of finite subgroups");
  sub_count->add_option("--degree", count_degree, "Polarization degree 2n")->required();
  sub_count->add_option("--mode", count_mode, "involutions | subgroups-mod2")
      ->check(CLI::IsMember({"involutions", "subgroups-mod2"}));

  int64_t pres_n = 1;
  std::string pres_group = "pi1orb";
  auto* sub_pres = app.add_subcommand("presentation", "Free product presentations");
  sub_pres->add_option("--n", pres_n, "Level n >= 1")->required();
  sub_pres->add_option("--group", pres_group, "pi1orb | fricke | auts-mod2")
      ->check(CLI::IsMember({"pi1orb", "fricke", "auts-mod2"}));

  int64_t cls_n = 1;
  std::vector<int64_t> cls_matrix;
  std::string cls_det = "1";
  auto* sub_cls = app.add_subcommand("classify", "Dynamical type of a Fricke group element");
  sub_cls->add_option("--n", cls_n, "Level n >= 1")->required();
  sub_cls->add_option("--matrix", cls_matrix, "Entries p,q,r,s")
      ->required()
      ->delimiter(',')
      ->expected(4);
  sub_cls->add_option("--det", cls_det, "1 (unit) | n (Fricke coset)")
      ->required()
      ->check(CLI::IsMember({"1", "n"}));

  int64_t cubic_degree = 2;
  auto* sub_cubic = app.add_subcommand("cubic", "Associated cubic fourfold criteria");
  sub_cubic->add_option("--degree", cubic_degree, "Polarization degree 2n")->required();

  int64_t cn_d = -3;
  auto* sub_cn = app.add_subcommand("class-number", "Class number of a negative discriminant");
  sub_cn->add_option("--d", cn_d, "Discriminant d < 0, d = 0 or 1 mod 4")->required();

  int64_t tw_n = 1;
  std::vector<int64_t> tw_delta;
  auto* sub_tw = app.add_subcommand("twist-matrix", "Lattice matrices of spherical twists");
  sub_tw->add_option("--n", tw_n, "Level n >= 1")->required();
  sub_tw->add_option("--delta", tw_delta, "Reflection vector r,d,s with square -2")
      ->delimiter(',')
      ->expected(3);

  int64_t ver_max_n = 500;
  auto* sub_ver = app.add_subcommand("verify", "Run all cross-module consistency sweeps");
  sub_ver->add_option("--max-n", ver_max_n, "Largest level to sweep (default 500)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*sub_inv) return run_invariants(inv_n, inv_fricke);
    if (*sub_count) return run_count(count_degree, count_mode);
    if (*sub_pres) return run_presentation(pres_n, pres_group);
    if (*sub_cls) return run_classify(cls_n, cls_matrix, cls_det);
    if (*sub_cubic) return run_cubic(cubic_degree);
    if (*sub_cn) return run_class_number(cn_d);
    if (*sub_tw) return run_twist_matrix(tw_n, tw_delta);
    if (*sub_ver) return run_verify(ver_max_n);
    throw InternalError("no subcommand dispatched");
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
