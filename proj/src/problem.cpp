#include "drg/problem.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "drg/errors.hpp"

namespace drg {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw ValidationError("field '" + field + "': " + what);
}

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) fail(where.empty() ? key : where + "." + key, "missing");
  return obj.at(key);
}

std::string join(const std::string& where, const std::string& key) { return where.empty() ? key : where + "." + key; }

Integer read_integer(const json& j, const std::string& field) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) == 0) return x;
  }
  fail(field, "expected an integer");
}

std::size_t read_count(const json& j, const std::string& field) {
  if (!j.is_number_integer() || j.get<long>() < 0) fail(field, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

Vector read_vector(const json& j, const std::string& field, std::optional<std::size_t> length = std::nullopt) {
  if (!j.is_array()) fail(field, "expected an array of integers");
  Vector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(read_integer(j[i], field + "[" + std::to_string(i) + "]"));
  if (length && v.size() != *length)
    fail(field, "expected length " + std::to_string(*length) + ", got " + std::to_string(v.size()));
  return v;
}

std::vector<Vector> read_vectors(const json& j, const std::string& field, std::size_t length) {
  if (!j.is_array()) fail(field, "expected an array of vectors");
  std::vector<Vector> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(read_vector(j[i], field + "[" + std::to_string(i) + "]", length));
  return out;
}

IntMatrix read_matrix(const json& j, const std::string& field, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) fail(field, "expected a " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
  return IntMatrix::from_rows(read_vectors(j, field, cols), cols);
}

IntMatrix read_square(const json& j, const std::string& field) {
  if (!j.is_array()) fail(field, "expected a square matrix");
  return read_matrix(j, field, j.size(), j.size());
}

BasedRootDatum read_root_datum(const json& j, const ProblemOptions& opt) {
  const std::string where = "root_datum";
  if (!j.is_object()) fail(where, "expected an object");
  auto check = [&](const RootDatum& d) {
    if (auto v = validate(d)) fail(where, "not a root datum: " + v->message());
  };
  auto first_simple = [](const RootDatum& d, std::size_t l) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < l; ++i) s.push_back(i);
    return BasedRootDatum(d, s);
  };

  if (j.contains("cartan") || j.contains("type")) {
    IntMatrix c;
    if (j.contains("cartan")) {
      c = read_square(j.at("cartan"), join(where, "cartan"));
    } else {
      const json& t = j.at("type");
      if (!t.is_string() || t.get<std::string>().size() < 2) fail(join(where, "type"), "expected a type such as \"D4\"");
      std::string s = t.get<std::string>();
      std::size_t n = 0;
      try {
        n = std::stoul(s.substr(1));
      } catch (const std::exception&) {
        fail(join(where, "type"), "cannot read the rank in \"" + s + "\"");
      }
      try {
        c = cartan_of_type(s[0], n);
      } catch (const std::exception& e) {
        fail(join(where, "type"), e.what());
      }
    }
    std::string form = j.value("form", std::string("simply_connected"));
    RootDatum d;
    try {
      if (form == "simply_connected")
        d = RootDatum::simply_connected(c);
      else if (form == "adjoint")
        d = RootDatum::adjoint(c);
      else
        fail(join(where, "form"), "expected \"simply_connected\" or \"adjoint\"");
    } catch (const ValidationError& e) {
      fail(where, e.what());
    }
    return first_simple(d, c.rows());
  }

  const std::size_t rank = read_count(require(j, "rank", where), join(where, "rank"));
  if (j.contains("simple_roots")) {
    auto sr = read_vectors(j.at("simple_roots"), join(where, "simple_roots"), rank);
    auto sc = read_vectors(require(j, "simple_coroots", where), join(where, "simple_coroots"), rank);
    if (sr.size() != sc.size()) fail(join(where, "simple_coroots"), "must have as many entries as simple_roots");
    RootDatum d;
    try {
      d = RootDatum::from_simple(rank, sr, sc, opt.weyl_cap);
    } catch (const ValidationError& e) {
      fail(where, e.what());
    }
    return first_simple(d, sr.size());
  }
  auto roots = read_vectors(require(j, "roots", where), join(where, "roots"), rank);
  auto coroots = read_vectors(require(j, "coroots", where), join(where, "coroots"), rank);
  if (roots.size() != coroots.size()) fail(join(where, "coroots"), "must have as many entries as roots");
  RootDatum d(rank, roots, coroots);
  check(d);
  try {
    if (j.contains("simple")) {
      const json& s = j.at("simple");
      std::vector<std::size_t> idx;
      if (!s.is_array()) fail(join(where, "simple"), "expected an array of root indices");
      for (std::size_t i = 0; i < s.size(); ++i) {
        std::size_t k = read_count(s[i], join(where, "simple") + "[" + std::to_string(i) + "]");
        if (k >= roots.size()) fail(join(where, "simple") + "[" + std::to_string(i) + "]", "root index out of range");
        idx.push_back(k);
      }
      return BasedRootDatum(d, idx);
    }
    return BasedRootDatum::standard(d);
  } catch (const ValidationError& e) {
    fail(where, e.what());
  }
}

FiniteGroup read_gamma(const json& j, const ProblemOptions& opt) {
  const std::string where = "gamma";
  if (!j.is_object()) fail(where, "expected an object");
  if (j.contains("table")) {
    const json& t = j.at("table");
    if (!t.is_array()) fail(join(where, "table"), "expected an array of rows");
    std::vector<std::vector<std::size_t>> table;
    for (std::size_t i = 0; i < t.size(); ++i) {
      const std::string f = join(where, "table") + "[" + std::to_string(i) + "]";
      if (!t[i].is_array()) fail(f, "expected an array of element indices");
      std::vector<std::size_t> row;
      for (std::size_t k = 0; k < t[i].size(); ++k) row.push_back(read_count(t[i][k], f + "[" + std::to_string(k) + "]"));
      table.push_back(std::move(row));
    }
    if (j.contains("order") && read_count(j.at("order"), join(where, "order")) != table.size())
      fail(join(where, "order"), "does not match the number of table rows");
    FiniteGroup g;
    try {
      g = FiniteGroup::from_table(std::move(table));
    } catch (const ValidationError& e) {
      fail(join(where, "table"), e.what());
    }
    if (j.contains("generators")) {
      std::vector<std::size_t> gens;
      const json& gj = j.at("generators");
      if (!gj.is_array()) fail(join(where, "generators"), "expected an array of element indices");
      for (std::size_t i = 0; i < gj.size(); ++i)
        gens.push_back(read_count(gj[i], join(where, "generators") + "[" + std::to_string(i) + "]"));
      try {
        g.set_generators(std::move(gens));
        g.spanning_tree();
      } catch (const ValidationError& e) {
        fail(join(where, "generators"), e.what());
      }
    }
    return g;
  }
  const std::size_t degree = read_count(require(j, "degree", where), join(where, "degree"));
  const json& gj = require(j, "generators", where);
  if (!gj.is_array()) fail(join(where, "generators"), "expected an array of permutations");
  std::vector<Permutation> perms;
  for (std::size_t i = 0; i < gj.size(); ++i) {
    const std::string f = join(where, "generators") + "[" + std::to_string(i) + "]";
    if (!gj[i].is_array()) fail(f, "expected a permutation");
    Permutation p;
    for (std::size_t k = 0; k < gj[i].size(); ++k) p.push_back(read_count(gj[i][k], f));
    if (!is_permutation(p, degree)) fail(f, "not a permutation of {0.." + std::to_string(degree) + "-1}");
    perms.push_back(std::move(p));
  }
  return FiniteGroup::from_generators(degree, perms, opt.group_cap);
}

}  // namespace

ProblemFile parse_problem_text(const std::string& text, const std::string& source) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(source + ": parse error: " + e.what());
  }
  if (!j.is_object()) throw ValidationError(source + ": top level must be an object");
  try {
    const json& schema = require(j, "schema", "");
    if (!schema.is_string() || schema.get<std::string>() != kProblemSchema)
      fail("schema", std::string("expected \"") + kProblemSchema + "\"");

    ProblemFile p;
    p.name = j.value("name", std::string());
    if (j.contains("options")) {
      const json& o = j.at("options");
      if (!o.is_object()) fail("options", "expected an object");
      if (o.contains("max_k")) p.options.max_k = read_count(o.at("max_k"), "options.max_k");
      if (o.contains("budget")) p.options.budget = read_count(o.at("budget"), "options.budget");
      if (o.contains("group_cap")) p.options.group_cap = read_count(o.at("group_cap"), "options.group_cap");
      if (o.contains("weyl_cap")) p.options.weyl_cap = read_count(o.at("weyl_cap"), "options.weyl_cap");
      if (o.contains("format")) {
        if (!o.at("format").is_string()) fail("options.format", "expected \"text\" or \"json\"");
        p.options.format = o.at("format").get<std::string>();
        if (p.options.format != "text" && p.options.format != "json") fail("options.format", "expected \"text\" or \"json\"");
      }
    }
    p.based = read_root_datum(require(j, "root_datum", ""), p.options);
    p.gamma = j.contains("gamma") ? read_gamma(j.at("gamma"), p.options) : FiniteGroup();

    const std::size_t rank = p.based->datum().rank();
    std::vector<IntMatrix> images;
    if (j.contains("ad")) {
      const json& a = j.at("ad");
      if (!a.is_array()) fail("ad", "expected one matrix per generator of gamma");
      for (std::size_t i = 0; i < a.size(); ++i)
        images.push_back(read_matrix(a[i], "ad[" + std::to_string(i) + "]", rank, rank));
    } else {
      images.assign(p.gamma.generators().size(), IntMatrix::identity(rank));
    }
    if (images.size() != p.gamma.generators().size())
      fail("ad", "expected " + std::to_string(p.gamma.generators().size()) + " matrices (one per generator), got " +
                     std::to_string(images.size()));
    for (std::size_t i = 0; i < images.size(); ++i) {
      BRDCheck c = is_brd_automorphism(*p.based, images[i]);
      if (!c) fail("ad[" + std::to_string(i) + "]", c.violation);
    }
    p.ad = extend_from_generators(p.gamma, images, rank);
    AdCheck c = validate_ad(*p.based, p.ad);
    if (!c) fail("ad", c.violation);
    return p;
  } catch (const ValidationError& e) {
    throw ValidationError(source + ": " + e.what());
  }
}

ProblemFile parse_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem_text(buf.str(), path);
}

}  // namespace drg
