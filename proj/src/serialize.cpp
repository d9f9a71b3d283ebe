#include "hpss/serialize.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <set>

#include "hpss/error.hpp"

namespace hpss {

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorCode::SchemaError, what); }

Json integer_to_json(const mpz_class& z) {
  if (z.fits_slong_p() && sizeof(long) == 8) return Json(z.get_si());
  return Json(z.get_str());
}

mpz_class integer_from_json(const Json& doc, const char* field) {
  if (doc.is_number_integer()) return mpz_class(std::to_string(doc.get<long long>()));
  if (doc.is_number_unsigned()) return mpz_class(std::to_string(doc.get<unsigned long long>()));
  if (doc.is_string()) {
    mpz_class z;
    if (z.set_str(doc.get<std::string>(), 10) != 0) schema(std::string("field ") + field + " is not an integer");
    return z;
  }
  schema(std::string("field ") + field + " must be an integer");
}

mpq_class fraction(const Json& obj, const char* num, const char* den, bool required) {
  if (!obj.contains(num)) {
    if (required) schema(std::string("missing field ") + num);
    return 0;
  }
  mpz_class n = integer_from_json(obj.at(num), num);
  mpz_class d = obj.contains(den) ? integer_from_json(obj.at(den), den) : mpz_class(1);
  if (d == 0) schema(std::string("zero denominator in ") + den);
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

std::size_t index_from_json(const Json& obj, const char* field, std::size_t bound) {
  if (!obj.contains(field)) schema(std::string("missing field ") + field);
  const Json& v = obj.at(field);
  if (!v.is_number_integer() && !v.is_number_unsigned()) schema(std::string("field ") + field + " must be an integer");
  long long i = v.get<long long>();
  if (i < 0 || static_cast<std::size_t>(i) >= bound) schema(std::string("index out of range in ") + field);
  return static_cast<std::size_t>(i);
}

const Json& require(const Json& obj, const char* field) {
  if (!obj.is_object()) schema("expected an object");
  if (!obj.contains(field)) schema(std::string("missing field ") + field);
  return obj.at(field);
}

std::vector<BracketEntry> brackets_from_json(const Json& arr, std::size_t dim) {
  if (!arr.is_array()) schema("brackets must be an array");
  std::vector<BracketEntry> out;
  for (const Json& e : arr) {
    if (!e.is_object()) schema("bracket entries must be objects");
    BracketEntry be;
    be.i = index_from_json(e, "i", dim);
    be.j = index_from_json(e, "j", dim);
    const Json& terms = require(e, "terms");
    if (!terms.is_array()) schema("terms must be an array");
    for (const Json& t : terms) {
      if (!t.is_object()) schema("terms must be objects");
      BracketTerm bt;
      bt.k = index_from_json(t, "k", dim);
      bt.coeff = scalar_from_json(t);
      be.terms.push_back(std::move(bt));
    }
    out.push_back(std::move(be));
  }
  return out;
}

std::vector<std::string> labels_from_json(const Json& arr, const char* field) {
  if (!arr.is_array()) schema(std::string(field) + " must be an array of strings");
  std::vector<std::string> out;
  for (const Json& s : arr) {
    if (!s.is_string()) schema(std::string(field) + " must be an array of strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

/// Merges duplicates into i < j order and drops zero terms.
Json brackets_to_json(const std::vector<BracketEntry>& brackets, std::size_t dim) {
  std::set<std::pair<std::size_t, std::size_t>> forward;
  for (const BracketEntry& e : brackets)
    if (e.i < e.j) forward.insert({e.i, e.j});
  std::map<std::pair<std::size_t, std::size_t>, Vector> merged;
  for (const BracketEntry& e : brackets) {
    if (e.i == e.j) continue;
    // a reversed pair only counts when its forward pair is absent
    if (e.i > e.j && forward.count({e.j, e.i})) continue;
    const bool flip = e.i > e.j;
    auto key = flip ? std::make_pair(e.j, e.i) : std::make_pair(e.i, e.j);
    Vector& v = merged.try_emplace(key, Vector(dim)).first->second;
    for (const BracketTerm& t : e.terms) v[t.k] += flip ? -t.coeff : t.coeff;
  }
  Json arr = Json::array();
  for (const auto& [key, v] : merged) {
    Json terms = Json::array();
    for (std::size_t k = 0; k < dim; ++k) {
      if (v[k].is_zero()) continue;
      Json t = Json::object();
      t["k"] = k;
      Json coeff = scalar_to_json(v[k]);
      for (auto& [name, value] : coeff.items()) t[name] = value;
      terms.push_back(std::move(t));
    }
    if (terms.empty()) continue;
    Json e = Json::object();
    e["i"] = key.first;
    e["j"] = key.second;
    e["terms"] = std::move(terms);
    arr.push_back(std::move(e));
  }
  return arr;
}

}  // namespace

Json scalar_to_json(const Scalar& s) {
  Json j = Json::object();
  j["re_num"] = integer_to_json(s.re().get_num());
  j["re_den"] = integer_to_json(s.re().get_den());
  j["im_num"] = integer_to_json(s.im().get_num());
  j["im_den"] = integer_to_json(s.im().get_den());
  return j;
}

Scalar scalar_from_json(const Json& doc) {
  if (!doc.is_object()) schema("coefficient must be an object");
  return Scalar(fraction(doc, "re_num", "re_den", false), fraction(doc, "im_num", "im_den", false));
}

RealLieAlgebraSpec spec_from_json(const Json& doc) {
  if (!doc.is_object()) schema("spec must be a JSON object");
  RealLieAlgebraSpec spec;
  const Json& name = require(doc, "name");
  if (!name.is_string()) schema("name must be a string");
  spec.name = name.get<std::string>();

  const bool has_cp = doc.contains("complex_presentation") && !doc.at("complex_presentation").is_null();
  const bool has_real = doc.contains("J") && !doc.at("J").is_null();
  if (!has_cp && !has_real) schema("spec needs J or a complex_presentation");

  if (has_real || doc.contains("dim")) {
    const Json& dim = require(doc, "dim");
    if (!dim.is_number_integer() || dim.get<long long>() <= 0) schema("dim must be a positive integer");
    spec.dim = static_cast<std::size_t>(dim.get<long long>());
  }
  if (doc.contains("basis")) {
    spec.basis = labels_from_json(doc.at("basis"), "basis");
    if (spec.basis.size() != spec.dim) schema("basis length differs from dim");
  }
  if (doc.contains("brackets")) spec.brackets = brackets_from_json(doc.at("brackets"), spec.dim);

  if (has_real) {
    const Json& jm = doc.at("J");
    if (!jm.is_array() || jm.size() != spec.dim * spec.dim) schema("J must be an array of dim*dim rationals");
    for (const Json& e : jm) {
      if (!e.is_object()) schema("J entries must be {num, den} objects");
      spec.J.push_back(fraction(e, "num", "den", true));
    }
  }

  if (has_cp) {
    const Json& cpj = doc.at("complex_presentation");
    if (!cpj.is_object()) schema("complex_presentation must be an object");
    ComplexPresentation cp;
    const Json& n = require(cpj, "n");
    if (!n.is_number_integer() || n.get<long long>() <= 0) schema("complex_presentation.n must be positive");
    cp.n = static_cast<std::size_t>(n.get<long long>());
    if (cpj.contains("labels")) {
      cp.labels = labels_from_json(cpj.at("labels"), "labels");
      if (cp.labels.size() != cp.n) schema("labels length differs from n");
    }
    if (cpj.contains("brackets")) cp.brackets = brackets_from_json(cpj.at("brackets"), 2 * cp.n);
    if (has_real && 2 * cp.n != spec.dim) schema("complex_presentation.n must be dim/2");
    if (!has_real) spec.dim = 2 * cp.n;
    spec.complex_presentation = std::move(cp);
  }
  if (spec.basis.empty()) {
    for (std::size_t i = 0; i < spec.dim; ++i) spec.basis.push_back("e" + std::to_string(i + 1));
  }
  return spec;
}

RealLieAlgebraSpec parse_spec(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    schema(std::string("invalid JSON: ") + e.what());
  }
  return spec_from_json(doc);
}

Json spec_to_json(const RealLieAlgebraSpec& spec) {
  Json doc = Json::object();
  doc["name"] = spec.name;
  doc["dim"] = spec.dim;
  doc["basis"] = spec.basis;
  doc["brackets"] = brackets_to_json(spec.brackets, spec.dim);
  if (spec.has_real_presentation()) {
    Json jm = Json::array();
    for (const mpq_class& q : spec.J) {
      Json e = Json::object();
      e["num"] = integer_to_json(q.get_num());
      e["den"] = integer_to_json(q.get_den());
      jm.push_back(std::move(e));
    }
    doc["J"] = std::move(jm);
  }
  if (spec.complex_presentation) {
    const ComplexPresentation& cp = *spec.complex_presentation;
    Json cpj = Json::object();
    cpj["n"] = cp.n;
    if (!cp.labels.empty()) cpj["labels"] = cp.labels;
    cpj["brackets"] = brackets_to_json(cp.brackets, 2 * cp.n);
    doc["complex_presentation"] = std::move(cpj);
  }
  return doc;
}

std::string emit_spec(const RealLieAlgebraSpec& spec) { return spec_to_json(spec).dump(2) + "\n"; }

Json monomial_to_json(Monomial m, std::size_t n) {
  Json j = Json::object();
  j["vec"] = m.vec_indices(n);
  j["form"] = m.form_indices(n);
  return j;
}

Json element_to_json(const SparseElement& x) {
  Json arr = Json::array();
  for (const auto& [m, c] : x.terms()) {
    Json t = Json::object();
    t["monomial"] = monomial_to_json(m, x.n());
    t["coefficient"] = scalar_to_json(c);
    arr.push_back(std::move(t));
  }
  return arr;
}

SparseElement element_from_json(const Json& doc, Side side, std::size_t n, int p, int q) {
  if (!doc.is_array()) schema("element must be an array of terms");
  SparseElement out(side, n, p, q);
  auto indices = [n](const Json& arr, const char* field) {
    if (!arr.is_array()) schema(std::string(field) + " must be an array");
    std::vector<std::size_t> out;
    for (const Json& v : arr) {
      if (!v.is_number_integer() || v.get<long long>() < 0 || static_cast<std::size_t>(v.get<long long>()) >= n) {
        schema(std::string("bad index in ") + field);
      }
      out.push_back(static_cast<std::size_t>(v.get<long long>()));
    }
    if (!std::is_sorted(out.begin(), out.end()) || std::adjacent_find(out.begin(), out.end()) != out.end()) {
      schema(std::string(field) + " must be strictly increasing");
    }
    return out;
  };
  for (const Json& t : doc) {
    const Json& mono = require(t, "monomial");
    std::vector<std::size_t> vec = indices(require(mono, "vec"), "vec");
    std::vector<std::size_t> form = indices(require(mono, "form"), "form");
    if (static_cast<int>(vec.size()) != p || static_cast<int>(form.size()) != q) {
      schema("term has the wrong bidegree");
    }
    out.add(Monomial::from_indices(n, vec, form), scalar_from_json(require(t, "coefficient")));
  }
  return out;
}

}  // namespace hpss
