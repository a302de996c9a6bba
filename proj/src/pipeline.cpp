#include "drg/pipeline.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "drg/errors.hpp"
#include "drg/extension.hpp"

namespace drg {

namespace {

Report base_report(const std::string& command, const ProblemFile& p) {
  Report r;
  r.command = command;
  r.name = p.name;
  r.rank = p.datum().datum().rank();
  r.num_roots = p.datum().datum().num_roots();
  r.gamma_order = p.gamma.order();
  return r;
}

std::vector<std::string> relations(const GammaModule& m, const Cochain& c) {
  std::vector<std::string> out;
  const FiniteGroup& g = m.gamma();
  const std::size_t n = g.order();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == g.identity() || b == g.identity()) continue;
      out.push_back("s(" + std::to_string(a) + ") s(" + std::to_string(b) + ") = " + to_string(c.values[a * n + b]) +
                    " s(" + std::to_string(g.mul(a, b)) + ")");
    }
  const std::size_t s = m.num_coordinates();
  for (std::size_t gen : g.generators())
    for (std::size_t j = 0; j < s; ++j) {
      Vector e(s);
      e[j] = 1;
      out.push_back("s(" + std::to_string(gen) + ") " + to_string(e) + " s(" + std::to_string(gen) + ")^-1 = " +
                    to_string(m.act(gen, e)));
    }
  return out;
}

ClassifySection classify_section(const ProblemFile& p, const RunOptions& o) {
  TowerOptions t;
  t.max_k = o.max_k;
  t.cohomology.budget = o.budget;
  Classification cl = classify(p.datum(), p.ad, t);
  ClassifySection s;
  s.torus_rank = cl.center.group.torus_rank();
  s.center_factors = cl.center.group.finite_part().invariant_factors();
  const GammaModule& host = cl.tower.host->module();
  for (std::size_t g = 0; g < p.gamma.order(); ++g)
    s.action.push_back({g, p.ad.images[g], cl.character_map_inverses[g], host.action(g)});
  s.coefficient_factors = host.coeff().invariant_factors();
  s.h2_factors = cl.tower.h2.invariant_factors();
  s.k_used = cl.tower.k_used;
  s.rule = cl.tower.rule;
  s.eckmann = cl.eckmann.holds;
  for (const auto& lv : cl.tower.levels)
    s.tower.push_back({lv.k, lv.modulus, lv.coefficients.invariant_factors(), lv.h2.invariant_factors(),
                       lv.has_comparison, lv.comparison_injective, lv.comparison_bijective});
  for (const auto& d : cl.descriptors)
    s.classes.push_back({d.h2_class.coordinates, d.split, d.h2_class.representative.values,
                         relations(host, d.h2_class.representative)});
  return s;
}

WeylSection weyl_section(const ProblemFile& p) {
  WeylGroup w = weyl_generate(p.datum(), p.options.weyl_cap);
  return {w.order(), w.generators, positive_systems(p.datum(), w).size()};
}

DynkinSection dynkin_section(const ProblemFile& p) {
  DynkinDiagram d = dynkin(p.datum());
  DynkinSection s;
  s.vertices = d.num_vertices;
  for (const auto& e : d.edges) s.edges.push_back({e.a, e.b, e.label_ab, e.label_ba});
  s.cartan = p.datum().cartan_matrix();
  s.semisimple = p.datum().is_semisimple();
  if (s.semisimple) {
    DiagramAutomorphisms a = diagram_automorphisms(p.datum());
    s.automorphisms = a.automorphisms.size();
    s.diagram_symmetries = a.diagram_symmetries;
    s.non_lifting = a.non_lifting;
  }
  return s;
}

CenterSection center_section(const ProblemFile& p) {
  Center c = center(p.datum().datum());
  return {c.group.torus_rank(), c.group.finite_part().invariant_factors()};
}

// ---------------------------------------------------------------------------
// check

using CheckFn = std::function<std::string()>;  // empty string on success

void run_check(std::vector<CheckItem>& out, const std::string& name, const CheckFn& fn) {
  try {
    std::string detail = fn();
    out.push_back({name, detail.empty(), detail});
  } catch (const std::exception& e) {
    out.push_back({name, false, e.what()});
  }
}

bool same_mod(const Vector& a, const Vector& b, const FGAbelianGroup& g) { return g.reduce(a) == g.reduce(b); }

Cochain random_cochain(const GammaModule& m, std::size_t degree, std::mt19937_64& rng) {
  Cochain c = Cochain::zero(m, degree);
  for (auto& v : c.values)
    for (std::size_t j = 0; j < v.size(); ++j) {
      std::uniform_int_distribution<long> dist(0, m.coeff().modulus(j).get_si() - 1);
      v[j] = dist(rng);
    }
  return c;
}

std::vector<CheckItem> check_section(const ProblemFile& p, const RunOptions& o) {
  std::vector<CheckItem> out;
  const BasedRootDatum& based = p.datum();
  const RootDatum& datum = based.datum();
  std::mt19937_64 rng(o.seed);

  run_check(out, "root_datum.axioms", [&]() -> std::string {
    auto v = validate(datum);
    return v ? v->message() : "";
  });
  run_check(out, "root_datum.reflections_permute_roots", [&]() -> std::string {
    for (std::size_t i = 0; i < datum.num_roots(); ++i) {
      if (!root_permutation(datum, reflection(datum, i))) return "s_" + std::to_string(i) + " does not permute roots";
      if (!coroot_permutation(datum, coreflection(datum, i)))
        return "s_" + std::to_string(i) + "^v does not permute coroots";
    }
    return "";
  });
  run_check(out, "weyl.simply_transitive_on_positive_systems", [&]() -> std::string {
    WeylGroup w = weyl_generate(based, p.options.weyl_cap);
    auto ps = positive_systems(based, w);
    if (ps.size() != w.order())
      return std::to_string(ps.size()) + " positive systems for |W| = " + std::to_string(w.order());
    return "";
  });
  run_check(out, "exactlin.smith_form_of_root_matrix", [&]() -> std::string {
    IntMatrix a = datum.root_matrix();
    SmithDecomposition s = smith_normal_form(a);
    if (!(s.U * a * s.V == s.D)) return "U A V != D";
    if (!is_unimodular(s.U) || !is_unimodular(s.V)) return "U or V not unimodular";
    return "";
  });
  Center c = center(datum);
  run_check(out, "abgroup.torsion_order", [&]() -> std::string {
    const Integer n = static_cast<unsigned long>(std::max<std::size_t>(p.gamma.order(), 2));
    for (unsigned long k = 1; k <= 3; ++k) {
      Integer nk = power(n, k);
      Integer want = power(nk, c.group.torus_rank());
      const FGAbelianGroup fin = c.group.finite_part();
      for (const auto& f : fin.invariant_factors()) want *= gcd(f, nk);
      if (torsion_at(c.group, nk).group().order() != want) return "wrong order at n = " + nk.get_str();
    }
    return "";
  });
  run_check(out, "autbrd.ad_is_valid", [&]() -> std::string { return validate_ad(based, p.ad).violation; });

  std::vector<IntMatrix> forward;
  for (const auto& t : p.ad.images) forward.push_back(induced_center_action(based, c, t).character_map());
  run_check(out, "autbrd.center_action_is_functorial", [&]() -> std::string {
    const FiniteGroup& g = p.gamma;
    for (std::size_t x = 0; x < g.order(); ++x)
      for (std::size_t y = 0; y < g.order(); ++y) {
        IntMatrix lhs = forward[g.mul(x, y)], rhs = forward[x] * forward[y];
        for (std::size_t j = 0; j < lhs.cols(); ++j)
          if (!same_mod(lhs.col(j), rhs.col(j), c.group.character_group()))
            return "action(" + std::to_string(x) + "*" + std::to_string(y) + ") != action(" + std::to_string(x) +
                   ")action(" + std::to_string(y) + ")";
      }
    return "";
  });
  std::vector<IntMatrix> inverses;
  for (const auto& t : p.ad.images) inverses.push_back(induced_center_action(based, c, t).character_map_inverse());
  const Integer n = static_cast<unsigned long>(p.gamma.order());
  run_check(out, "autbrd.center_action_commutes_with_inclusions", [&]() -> std::string {
    TorsionLevel a = torsion_at(c.group, n), b = torsion_at(c.group, n * n);
    AbHom inc = torsion_inclusion(a, b);
    for (std::size_t g = 0; g < p.gamma.order(); ++g) {
      AbHom fa = torsion_action(a, inverses[g]), fb = torsion_action(b, inverses[g]);
      if (!(fb.compose(inc) == inc.compose(fa))) return "fails for element " + std::to_string(g);
    }
    return "";
  });

  GammaModule m = torsion_module(p.gamma, torsion_at(c.group, n), inverses);
  CohomologyOptions copt{o.budget};
  run_check(out, "cohomology.d_squared_is_zero", [&]() -> std::string {
    for (std::size_t deg = 0; deg <= 1; ++deg)
      for (int trial = 0; trial < 5; ++trial) {
        Cochain x = random_cochain(m, deg, rng);
        Cochain dd = differential(m, differential(m, x));
        for (const auto& v : dd.values)
          if (!m.coeff().is_zero(v)) return "d(d c) != 0 in degree " + std::to_string(deg);
      }
    return "";
  });
  run_check(out, "cohomology.differential_matrix_matches_formula", [&]() -> std::string {
    for (std::size_t deg = 0; deg <= 2; ++deg) {
      Cochain x = random_cochain(m, deg, rng);
      Vector lifted = differential_matrix(m, deg).apply(flatten(m, x));
      if (unflatten(m, deg + 1, lifted) != differential(m, x)) return "mismatch in degree " + std::to_string(deg);
    }
    return "";
  });
  run_check(out, "cohomology.eckmann", [&]() -> std::string {
    for (std::size_t deg = 1; deg <= 2; ++deg) {
      EckmannReport e = eckmann_check(CohomologyGroup(m, deg, copt));
      if (!e.holds) return e.failure;
    }
    return "";
  });
  run_check(out, "cohomology.representatives_normalized", [&]() -> std::string {
    CohomologyGroup h(m, 2, copt);
    for (const auto& cls : h.classes()) {
      if (!h.is_cocycle(cls.representative)) return "representative is not a cocycle";
      if (!is_normalized(m, cls.representative)) return "representative is not normalized";
      if (h.class_of(cls.representative) != cls.coordinates) return "representative has the wrong class";
      Cochain shifted = add(m, cls.representative, differential(m, random_cochain(m, 1, rng)));
      if (h.class_of(shifted) != cls.coordinates) return "adding a coboundary changed the class";
      if (h.canonical(shifted) != cls.representative) return "canonical representative is not unique";
    }
    return "";
  });
  run_check(out, "extension.round_trip", [&]() -> std::string {
    if (m.coeff().order() * n > 512) return "";
    CohomologyGroup h(m, 2, copt);
    for (const auto& cls : h.classes()) {
      ExtensionTable e = build_extension(m, cls.representative);
      Cochain back = extract_cocycle(e, e.canonical_section());
      if (back != cls.representative) return "extract(build(c)) != c";
    }
    return "";
  });
  run_check(out, "cohomology.tower_stabilizes", [&]() -> std::string {
    TowerOptions t;
    t.max_k = o.max_k;
    t.cohomology = copt;
    StabilizedH2 s = stabilized_h2(p.gamma, c.group, inverses, t);
    return s.stabilized ? "" : "no stabilization by k = " + std::to_string(o.max_k);
  });
  return out;
}

}  // namespace

Report run(const std::string& command, const ProblemFile& problem, const RunOptions& options) {
  Report r = base_report(command, problem);
  if (command == "classify")
    r.classify = classify_section(problem, options);
  else if (command == "weyl")
    r.weyl = weyl_section(problem);
  else if (command == "dynkin")
    r.dynkin = dynkin_section(problem);
  else if (command == "center")
    r.center = center_section(problem);
  else if (command == "check")
    r.checks = check_section(problem, options);
  else
    throw ValidationError("unknown command '" + command + "' (expected classify, weyl, dynkin, center or check)");
  return r;
}

Report error_report(const std::string& command, const std::string& kind, const std::string& message) {
  Report r;
  r.command = command;
  int code = kind == "validation" ? 1 : kind == "budget" ? 2 : 3;
  r.error = ErrorSection{kind, message, code};
  return r;
}

}  // namespace drg
