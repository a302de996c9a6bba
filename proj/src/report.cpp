#include "drg/report.hpp"

#include <sstream>

#include <json.hpp>

#include "drg/errors.hpp"

namespace drg {

namespace {

using nlohmann::json;

json int_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Integer int_from(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) == 0) return x;
  }
  throw ValidationError("report: expected an integer, got " + j.dump());
}

json vec_json(const Vector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(int_json(x));
  return a;
}

Vector vec_from(const json& j) {
  Vector v;
  for (const auto& x : j) v.push_back(int_from(x));
  return v;
}

json mat_json(const IntMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vec_json(m.row(i)));
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", a}};
}

IntMatrix mat_from(const json& j) {
  std::size_t r = j.at("rows").get<std::size_t>(), c = j.at("cols").get<std::size_t>();
  std::vector<Vector> rows;
  for (const auto& row : j.at("entries")) rows.push_back(vec_from(row));
  if (rows.size() != r) throw ValidationError("report: matrix row count mismatch");
  return IntMatrix::from_rows(rows, c);
}

json classify_json(const ClassifySection& s) {
  json tower = json::array();
  for (const auto& t : s.tower)
    tower.push_back({{"k", t.k},
                     {"modulus", int_json(t.modulus)},
                     {"coefficients", vec_json(t.coefficient_factors)},
                     {"h2", vec_json(t.h2_factors)},
                     {"has_comparison", t.has_comparison},
                     {"comparison_injective", t.comparison_injective},
                     {"comparison_bijective", t.comparison_bijective}});
  json action = json::array();
  for (const auto& a : s.action)
    action.push_back({{"element", a.element},
                      {"ad", mat_json(a.ad)},
                      {"character_map", mat_json(a.character_map)},
                      {"torsion_action", mat_json(a.torsion_action)}});
  json classes = json::array();
  for (const auto& c : s.classes) {
    json values = json::array();
    for (const auto& v : c.cocycle) values.push_back(vec_json(v));
    classes.push_back({{"coordinates", vec_json(c.coordinates)},
                       {"split", c.split},
                       {"cocycle", values},
                       {"relations", c.relations}});
  }
  return {{"center", {{"torus_rank", s.torus_rank}, {"finite_factors", vec_json(s.center_factors)}}},
          {"action", action},
          {"coefficients", vec_json(s.coefficient_factors)},
          {"h2", vec_json(s.h2_factors)},
          {"k_used", s.k_used},
          {"rule", s.rule},
          {"eckmann", s.eckmann},
          {"tower", tower},
          {"classes", classes}};
}

ClassifySection classify_from(const json& j) {
  ClassifySection s;
  s.torus_rank = j.at("center").at("torus_rank").get<std::size_t>();
  s.center_factors = vec_from(j.at("center").at("finite_factors"));
  for (const auto& a : j.at("action"))
    s.action.push_back({a.at("element").get<std::size_t>(), mat_from(a.at("ad")), mat_from(a.at("character_map")),
                        mat_from(a.at("torsion_action"))});
  s.coefficient_factors = vec_from(j.at("coefficients"));
  s.h2_factors = vec_from(j.at("h2"));
  s.k_used = j.at("k_used").get<std::size_t>();
  s.rule = j.at("rule").get<std::string>();
  s.eckmann = j.at("eckmann").get<bool>();
  for (const auto& t : j.at("tower"))
    s.tower.push_back({t.at("k").get<std::size_t>(), int_from(t.at("modulus")), vec_from(t.at("coefficients")),
                       vec_from(t.at("h2")), t.at("has_comparison").get<bool>(),
                       t.at("comparison_injective").get<bool>(), t.at("comparison_bijective").get<bool>()});
  for (const auto& c : j.at("classes")) {
    ClassReport r;
    r.coordinates = vec_from(c.at("coordinates"));
    r.split = c.at("split").get<bool>();
    for (const auto& v : c.at("cocycle")) r.cocycle.push_back(vec_from(v));
    r.relations = c.at("relations").get<std::vector<std::string>>();
    s.classes.push_back(std::move(r));
  }
  return s;
}

std::string factors_text(std::size_t free_rank, const Vector& f, const char* free_symbol) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < free_rank; ++i) {
    out << (first ? "" : " x ") << free_symbol;
    first = false;
  }
  for (const auto& x : f) {
    out << (first ? "" : " x ") << "Z/" << x;
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

void matrix_text(std::ostringstream& out, const IntMatrix& m) {
  out << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) out << (i ? ", " : "") << to_string(m.row(i));
  out << "]";
}

}  // namespace

int Report::exit_code() const {
  if (error) return error->exit_code;
  if (checks)
    for (const auto& c : *checks)
      if (!c.ok) return 3;
  return 0;
}

std::string report_to_json(const Report& r) {
  json j{{"schema", r.schema}, {"command", r.command}, {"name", r.name},
         {"rank", r.rank},     {"num_roots", r.num_roots}, {"gamma_order", r.gamma_order}};
  if (r.classify) j["classify"] = classify_json(*r.classify);
  if (r.weyl) {
    json gens = json::array();
    for (const auto& g : r.weyl->generators) gens.push_back(mat_json(g));
    j["weyl"] = {{"order", r.weyl->order}, {"generators", gens}, {"positive_systems", r.weyl->positive_systems}};
  }
  if (r.dynkin) {
    json edges = json::array();
    for (const auto& e : r.dynkin->edges)
      edges.push_back({{"a", e.a}, {"b", e.b}, {"label_ab", int_json(e.label_ab)}, {"label_ba", int_json(e.label_ba)}});
    j["dynkin"] = {{"vertices", r.dynkin->vertices},
                   {"edges", edges},
                   {"cartan", mat_json(r.dynkin->cartan)},
                   {"semisimple", r.dynkin->semisimple},
                   {"automorphisms", r.dynkin->automorphisms},
                   {"diagram_symmetries", r.dynkin->diagram_symmetries},
                   {"non_lifting", r.dynkin->non_lifting}};
  }
  if (r.center) j["center"] = {{"torus_rank", r.center->torus_rank}, {"finite_factors", vec_json(r.center->factors)}};
  if (r.checks) {
    json items = json::array();
    for (const auto& c : *r.checks) items.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    j["checks"] = items;
  }
  if (r.error)
    j["error"] = {{"kind", r.error->kind}, {"message", r.error->message}, {"exit_code", r.error->exit_code}};
  return j.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
  try {
    json j = json::parse(text);
    Report r;
    r.schema = j.at("schema").get<std::string>();
    if (r.schema != kReportSchema) throw ValidationError("report: unknown schema " + r.schema);
    r.command = j.at("command").get<std::string>();
    r.name = j.at("name").get<std::string>();
    r.rank = j.at("rank").get<std::size_t>();
    r.num_roots = j.at("num_roots").get<std::size_t>();
    r.gamma_order = j.at("gamma_order").get<std::size_t>();
    if (j.contains("classify")) r.classify = classify_from(j.at("classify"));
    if (j.contains("weyl")) {
      WeylSection w;
      w.order = j["weyl"].at("order").get<std::size_t>();
      for (const auto& g : j["weyl"].at("generators")) w.generators.push_back(mat_from(g));
      w.positive_systems = j["weyl"].at("positive_systems").get<std::size_t>();
      r.weyl = w;
    }
    if (j.contains("dynkin")) {
      const json& d = j.at("dynkin");
      DynkinSection s;
      s.vertices = d.at("vertices").get<std::size_t>();
      for (const auto& e : d.at("edges"))
        s.edges.push_back({e.at("a").get<std::size_t>(), e.at("b").get<std::size_t>(), int_from(e.at("label_ab")),
                           int_from(e.at("label_ba"))});
      s.cartan = mat_from(d.at("cartan"));
      s.semisimple = d.at("semisimple").get<bool>();
      s.automorphisms = d.at("automorphisms").get<std::size_t>();
      s.diagram_symmetries = d.at("diagram_symmetries").get<std::vector<std::vector<std::size_t>>>();
      s.non_lifting = d.at("non_lifting").get<std::vector<std::vector<std::size_t>>>();
      r.dynkin = s;
    }
    if (j.contains("center"))
      r.center = CenterSection{j["center"].at("torus_rank").get<std::size_t>(), vec_from(j["center"].at("finite_factors"))};
    if (j.contains("checks")) {
      std::vector<CheckItem> items;
      for (const auto& c : j.at("checks"))
        items.push_back({c.at("name").get<std::string>(), c.at("ok").get<bool>(), c.at("detail").get<std::string>()});
      r.checks = items;
    }
    if (j.contains("error"))
      r.error = ErrorSection{j["error"].at("kind").get<std::string>(), j["error"].at("message").get<std::string>(),
                             j["error"].at("exit_code").get<int>()};
    return r;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("report: ") + e.what());
  }
}

std::string report_to_text(const Report& r) {
  std::ostringstream out;
  out << r.command;
  if (!r.name.empty()) out << ": " << r.name;
  out << "\n";
  if (r.error) {
    out << "error (" << r.error->kind << "): " << r.error->message << "\n";
    return out.str();
  }
  out << "rank " << r.rank << ", " << r.num_roots << " roots, |Gamma| = " << r.gamma_order << "\n";
  if (r.center) out << "Z(G) = " << factors_text(r.center->torus_rank, r.center->factors, "C^x") << "\n";
  if (r.weyl) {
    out << "|W| = " << r.weyl->order << ", positive systems: " << r.weyl->positive_systems << "\n";
    for (std::size_t i = 0; i < r.weyl->generators.size(); ++i) {
      out << "  s_" << i << " = ";
      matrix_text(out, r.weyl->generators[i]);
      out << "\n";
    }
  }
  if (r.dynkin) {
    const DynkinSection& d = *r.dynkin;
    out << "Dynkin diagram: " << d.vertices << " vertices\n";
    for (const auto& e : d.edges)
      out << "  " << e.a << " -- " << e.b << "  (<a" << e.a << "^v, a" << e.b << "> = " << e.label_ab << ", <a" << e.b
          << "^v, a" << e.a << "> = " << e.label_ba << ")\n";
    if (d.semisimple) {
      out << "diagram symmetries: " << d.diagram_symmetries.size() << ", lifting to automorphisms: " << d.automorphisms
          << "\n";
      for (const auto& p : d.non_lifting) {
        out << "  no lift: (";
        for (std::size_t i = 0; i < p.size(); ++i) out << (i ? " " : "") << p[i];
        out << ")\n";
      }
    } else {
      out << "central torus present: Aut(B(G)) is infinite\n";
    }
  }
  if (r.classify) {
    const ClassifySection& s = *r.classify;
    out << "Z(G) = " << factors_text(s.torus_rank, s.center_factors, "C^x") << "\n";
    for (const auto& a : s.action) {
      out << "  Ad(" << a.element << ") = ";
      matrix_text(out, a.ad);
      out << ", on X*/ZR: ";
      matrix_text(out, a.character_map);
      out << "\n";
    }
    out << "torsion tower (n = |Gamma|):\n";
    for (const auto& t : s.tower) {
      out << "  k = " << t.k << ": Z[" << t.modulus << "] = " << factors_text(0, t.coefficient_factors, "")
          << ", H2 = " << factors_text(0, t.h2_factors, "");
      if (t.has_comparison)
        out << ", comparison " << (t.comparison_bijective ? "bijective" : t.comparison_injective ? "injective" : "not injective");
      out << "\n";
    }
    out << "H2(Gamma, Z(G)) = " << factors_text(0, s.h2_factors, "") << "  (k_used = " << s.k_used << ", " << s.rule
        << ")\n";
    out << "Eckmann check: " << (s.eckmann ? "holds" : "FAILS") << "\n";
    out << s.classes.size() << (s.classes.size() == 1 ? " class" : " classes") << "\n";
    for (const auto& c : s.classes) {
      out << "  class " << to_string(c.coordinates) << (c.split ? " (split: G x| Gamma)" : "") << "\n";
      for (const auto& rel : c.relations) out << "    " << rel << "\n";
    }
  }
  if (r.checks) {
    for (const auto& c : *r.checks)
      out << (c.ok ? "ok    " : "FAIL  ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
  }
  return out.str();
}

}  // namespace drg
