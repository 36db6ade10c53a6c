#include <fstream>
#include <sstream>

#include "dgk/errors.hpp"
#include "dgk/io.hpp"
#include "dgk/koszul.hpp"

namespace dgk {

const char* InputObject::kind() const {
  static constexpr const char* names[] = {"complex", "koszul", "trivial_diff_algebra", "mult_set"};
  return names[value.index()];
}

namespace {

std::string at_index(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }
std::string at_key(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }

const Json& require(const Json& obj, const std::string& path, const std::string& key) {
  if (!obj.is_object()) throw InputError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(at_key(path, key), "missing");
  return *it;
}

std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) throw InputError(path, "expected a string");
  return j.get<std::string>();
}

long long as_integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw InputError(path, "expected an integer");
  return j.get<long long>();
}

const Json& as_array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw InputError(path, "expected an array");
  return j;
}

Polynomial polynomial(const RingPtr& r, const Json& j, const std::string& path) {
  std::string text = j.is_number_integer() ? std::to_string(j.get<long long>()) : as_string(j, path);
  try {
    return parse_polynomial(r, text);
  } catch (const ParseError& e) {
    throw InputError(path, e.what());
  }
}

std::vector<Polynomial> polynomials(const RingPtr& r, const Json& j, const std::string& path) {
  std::vector<Polynomial> out;
  const Json& a = as_array(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(polynomial(r, a[i], at_index(path, i)));
  return out;
}

RingPtr ring(const Json& j) {
  const std::string path = "ring";
  std::vector<std::string> vars;
  const Json& v = as_array(require(j, path, "vars"), "ring.vars");
  for (std::size_t i = 0; i < v.size(); ++i) vars.push_back(as_string(v[i], at_index("ring.vars", i)));
  Field field = Field::rationals();
  if (j.contains("field")) {
    try {
      field = Field::parse(as_string(j["field"], "ring.field"));
    } catch (const std::exception& e) {
      throw InputError("ring.field", e.what());
    }
  }
  MonomialOrder order = MonomialOrder::grevlex();
  if (j.contains("order")) {
    const Json& o = j["order"];
    if (o.is_object()) {
      std::vector<long long> w;
      const Json& ws = as_array(require(o, "ring.order", "weights"), "ring.order.weights");
      for (std::size_t i = 0; i < ws.size(); ++i) w.push_back(as_integer(ws[i], at_index("ring.order.weights", i)));
      try {
        order = MonomialOrder::weight(std::move(w));
      } catch (const StructuralError& e) {
        throw InputError("ring.order", e.what());
      }
    } else {
      std::string name = as_string(o, "ring.order");
      if (name == "lex")
        order = MonomialOrder::lex();
      else if (name != "grevlex")
        throw InputError("ring.order", "unknown order '" + name + "'");
    }
  }
  try {
    return make_ring(std::move(vars), std::move(field), std::move(order));
  } catch (const StructuralError& e) {
    throw InputError(path, e.what());
  }
}

FreeComplex complex(const RingPtr& r, const Json& data) {
  const int lo = data.contains("lo") ? static_cast<int>(as_integer(data["lo"], "data.lo")) : 0;
  std::vector<std::size_t> ranks;
  const Json& rs = as_array(require(data, "data", "ranks"), "data.ranks");
  for (std::size_t i = 0; i < rs.size(); ++i) {
    long long v = as_integer(rs[i], at_index("data.ranks", i));
    if (v < 0) throw InputError(at_index("data.ranks", i), "negative rank");
    ranks.push_back(static_cast<std::size_t>(v));
  }
  if (ranks.empty()) throw InputError("data.ranks", "at least one rank is required");
  const Json& ds = as_array(require(data, "data", "differentials"), "data.differentials");
  if (ds.size() + 1 != ranks.size())
    throw InputError("data.differentials", "expected " + std::to_string(ranks.size() - 1) + " matrices");
  std::vector<PolyMatrix> diffs;
  for (std::size_t k = 0; k < ds.size(); ++k) {
    const std::string mpath = at_index("data.differentials", k);
    const std::size_t rows = ranks[k], cols = ranks[k + 1];
    const Json& m = as_array(ds[k], mpath);
    if (m.size() != rows) throw InputError(mpath, "expected " + std::to_string(rows) + " rows");
    PolyMatrix d(r, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      const std::string rpath = at_index(mpath, i);
      const Json& row = as_array(m[i], rpath);
      if (row.size() != cols) throw InputError(rpath, "expected " + std::to_string(cols) + " entries");
      for (std::size_t c = 0; c < cols; ++c) d.at(i, c) = polynomial(r, row[c], at_index(rpath, c));
    }
    diffs.push_back(std::move(d));
  }
  FreeComplex x(r, lo, std::move(ranks), std::move(diffs));
  if (auto v = validate_complex(x))
    throw InputError("data.differentials", "d_" + std::to_string(v->degree) + " d_" + std::to_string(v->degree + 1) +
                                               " has nonzero entry " + v->entry.to_string() + " at (" +
                                               std::to_string(v->row) + ", " + std::to_string(v->col) + ")");
  return x;
}

KoszulPtr koszul(const RingPtr& r, const Json& data) {
  auto seq = polynomials(r, require(data, "data", "sequence"), "data.sequence");
  try {
    return make_koszul(r, std::move(seq));
  } catch (const std::exception& e) {
    throw InputError("data.sequence", e.what());
  }
}

KoszulElement element(const KoszulPtr& a, const Json& j, const std::string& path) {
  if (j.is_string() || j.is_number_integer()) return KoszulElement::scalar(a, polynomial(a->ring(), j, path));
  KoszulElement out(a);
  const Json& terms = as_array(j, path);
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const std::string tpath = at_index(path, t);
    const Json& e = as_array(require(terms[t], tpath, "e"), at_key(tpath, "e"));
    Subset s = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      long long idx = as_integer(e[i], at_index(at_key(tpath, "e"), i));
      if (idx < 1 || idx > static_cast<long long>(a->length()))
        throw InputError(at_index(at_key(tpath, "e"), i), "index out of range 1.." + std::to_string(a->length()));
      Subset bit = Subset{1} << (idx - 1);
      if (s & bit) throw InputError(at_index(at_key(tpath, "e"), i), "repeated index");
      s |= bit;
    }
    Polynomial c = terms[t].contains("c") ? polynomial(a->ring(), terms[t]["c"], at_key(tpath, "c"))
                                          : Polynomial::constant(a->ring(), 1);
    out = out + KoszulElement::basis(a, s) * c;
  }
  return out;
}

MultiplicativeSet mult_set(const RingPtr& r, const Json& data) {
  KoszulPtr a = koszul(r, data);
  const Json& gs = as_array(require(data, "data", "generators"), "data.generators");
  std::vector<KoszulElement> gens;
  for (std::size_t i = 0; i < gs.size(); ++i) {
    KoszulElement g = element(a, gs[i], at_index("data.generators", i));
    if (!g.degree()) throw InputError(at_index("data.generators", i), "generator must be nonzero and homogeneous");
    gens.push_back(std::move(g));
  }
  unsigned bound = 4;
  if (data.contains("word_bound")) {
    long long b = as_integer(data["word_bound"], "data.word_bound");
    if (b < 1 || b > 16) throw InputError("data.word_bound", "expected 1..16");
    bound = static_cast<unsigned>(b);
  }
  return MultiplicativeSet(a, std::move(gens), bound);
}

}  // namespace

InputObject parse_input(const Json& doc) {
  if (!doc.is_object()) throw InputError("", "expected a JSON object");
  long long version = as_integer(require(doc, "", "schema_version"), "schema_version");
  if (version != kSchemaVersion)
    throw InputError("schema_version", "unsupported version " + std::to_string(version));
  RingPtr r = ring(require(doc, "", "ring"));
  const std::string object = as_string(require(doc, "", "object"), "object");
  const Json& data = require(doc, "", "data");
  if (!data.is_object()) throw InputError("data", "expected an object");
  if (object == "complex") return {r, complex(r, data)};
  if (object == "koszul") return {r, koszul(r, data)};
  if (object == "mult_set") return {r, mult_set(r, data)};
  if (object == "trivial_diff_algebra") {
    if (r->nvars() != 0) throw InputError("ring.vars", "the degree-0 part of k[X] is k: expected no variables");
    std::string gen = data.contains("generator") ? as_string(data["generator"], "data.generator") : "X";
    int degree = data.contains("degree") ? static_cast<int>(as_integer(data["degree"], "data.degree")) : 2;
    try {
      return {r, std::make_shared<const TrivialDiffAlgebra>(r->field(), gen, degree)};
    } catch (const std::exception& e) {
      throw InputError("data", e.what());
    }
  }
  throw InputError("object", "unknown object '" + object + "'");
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("", "cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw InputError("", path.string() + ": " + e.what());
  }
}

std::vector<Polynomial> parse_polynomial_list(const RingPtr& ring, const std::string& csv) {
  std::vector<Polynomial> out;
  if (csv.find_first_not_of(" \t") == std::string::npos) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = csv.find(',', start);
    std::string item = csv.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      out.push_back(parse_polynomial(ring, item));
    } catch (const ParseError& e) {
      throw InputError("item " + std::to_string(out.size() + 1), e.what());
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

MonomialPrime parse_monomial_prime(const RingPtr& ring, const std::string& csv) {
  MonomialPrime p;
  std::string t;
  for (char c : csv)
    if (c != ' ' && c != '(' && c != ')') t += c;
  if (t.empty() || t == "0") return p;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = t.find(',', start);
    std::string name = t.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    long i = ring->index_of(name);
    if (i < 0) throw InputError("prime", "unknown variable '" + name + "'");
    p.mask |= std::uint64_t{1} << i;
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return p;
}

}  // namespace dgk
