#include <algorithm>

#include "dgk/dimension.hpp"
#include "dgk/errors.hpp"
#include "dgk/io.hpp"
#include "dgk/koszul.hpp"

namespace dgk {

Json to_json(const ExtInt& v) {
  if (v.is_finite()) return v.value();
  return v.to_string();
}

namespace {

Json strings(const std::vector<Polynomial>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

Json dims_json(const std::vector<std::pair<int, ExtInt>>& dims) {
  Json a = Json::array();
  for (const auto& [deg, d] : dims) a.push_back({{"degree", deg}, {"dim", to_json(d)}});
  return a;
}

// A command that does not apply to the given object kind.
class WrongObject : public UnsupportedInput {
 public:
  WrongObject(const std::string& command, const InputObject& in)
      : UnsupportedInput(command + " does not apply to a " + in.kind()) {}
};

FreeComplex complex_of(const std::string& command, const InputObject& in) {
  if (auto* x = std::get_if<FreeComplex>(&in.value)) return *x;
  if (auto* a = std::get_if<KoszulPtr>(&in.value)) return to_free_complex(**a);
  throw WrongObject(command, in);
}

KoszulPtr koszul_of(const std::string& command, const InputObject& in) {
  if (auto* a = std::get_if<KoszulPtr>(&in.value)) return *a;
  throw WrongObject(command, in);
}

DGAlgebra algebra_of(const std::string& command, const InputObject& in) {
  if (auto* a = std::get_if<KoszulPtr>(&in.value)) return *a;
  if (auto* t = std::get_if<TrivialPtr>(&in.value)) return *t;
  throw WrongObject(command, in);
}

std::vector<Polynomial> pool_of(const InputObject& in, const CommandOptions& o) {
  if (o.pool) return parse_polynomial_list(in.ring, *o.pool);
  return default_pool(in.ring, o.forms, o.seed);
}

std::size_t limit_of(const InputObject& in, const CommandOptions& o) { return o.limit.value_or(in.ring->nvars()); }

std::vector<Polynomial> seq_of(const std::string& command, const InputObject& in, const CommandOptions& o) {
  if (!o.seq) throw InputError("--seq", command + " needs a sequence");
  return parse_polynomial_list(in.ring, *o.seq);
}

Json ldim_json(const DimensionReport& d) {
  return {{"lower", to_json(d.ldim_lower)},
          {"upper", to_json(d.ldim_upper)},
          {"verdict", to_string(d.verdict)},
          {"witness", strings(d.witness)},
          {"witness_from_pool", d.witness_from_pool},
          {"candidates_tested", d.candidates_tested}};
}

DimensionReport ldim_or_unsupported(const ComplexAnalysis& x, const std::vector<Polynomial>& pool, std::size_t limit) {
  if (!x.inf().is_finite()) throw UnsupportedInput("the complex is exact: no length dimension");
  return ldim(x, pool, limit);
}

Json christensen_json(const ChristensenCheck& c) {
  return {{"holds", c.holds()},
          {"anchor", c.anchor},
          {"length_matches", c.length_matches},
          {"required_length", to_json(c.required_length)},
          {"tensor_inf_at_m", to_json(c.tensor_inf_at_m)},
          {"tensor_dim_at_m", to_json(c.tensor_dim_at_m)}};
}

Json module_sop_json(const ModuleSopCheck& c) {
  return {{"holds", c.holds()}, {"dim", to_json(c.dim)}, {"quotient_dim", to_json(c.quotient_dim)}};
}

Json optional_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

Json certificate_json(const SopCertificate& c) {
  return {{"sequence", strings(c.sequence)},
          {"christensen_sop", christensen_json(c.christensen)},
          {"h0_sop", module_sop_json(c.h0)},
          {"length_sequence", c.length_sequence},
          {"length_sop", optional_bool(c.length_sop)},
          {"tensor_dims", dims_json(c.tensor_dims)}};
}

// ---------------------------------------------------------------------------

CommandResult cmd_homology(const InputObject& in, const CommandOptions&) {
  ComplexAnalysis x(complex_of("homology", in));
  Json degrees = Json::array();
  for (const auto& e : x.homology().entries()) {
    degrees.push_back({{"degree", e.degree},
                       {"zero", e.is_zero()},
                       {"generators", e.module.generators()},
                       {"relations", e.module.relations().cols()},
                       {"dim", to_json(e.dim)},
                       {"finite_length", e.dim <= ExtInt(0)},
                       {"fitting", strings(e.fitting_basis.polynomials())}});
  }
  return {{{"inf", to_json(x.inf())}, {"homology", degrees}}};
}

CommandResult cmd_dim(const InputObject& in, const CommandOptions&) {
  ComplexAnalysis x(complex_of("dim", in));
  Json dims = Json::array();
  for (const auto& e : x.homology().entries())
    if (!e.is_zero()) dims.push_back({{"degree", e.degree}, {"dim", to_json(e.dim)}});
  Json support = nullptr;
  if (const auto& s = x.monomial_support()) {
    support = Json::array();
    const auto& entries = x.homology().entries();
    for (std::size_t k = 0; k < entries.size(); ++k) {
      if (entries[k].is_zero()) continue;
      Json primes = Json::array();
      for (const auto& p : (*s)[k]) primes.push_back(p.to_string(*in.ring));
      support.push_back({{"degree", entries[k].degree}, {"minimal_primes", primes}});
    }
  }
  return {{{"inf", to_json(x.inf())},
           {"dim", to_json(foxby_dim(x))},
           {"homology_dims", dims},
           {"support_is_everything", x.support_is_everything()},
           {"support", support}}};
}

CommandResult cmd_anchor(const InputObject& in, const CommandOptions& o) {
  ComplexAnalysis x(complex_of("anchor", in));
  const std::size_t n = in.ring->nvars();
  std::vector<MonomialPrime> primes;
  if (o.all_primes) {
    if (n > 12) throw UnsupportedInput("--all-primes needs at most 12 variables");
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) primes.push_back({m});
    std::sort(primes.begin(), primes.end());
  } else if (o.primes.empty()) {
    primes.push_back(MonomialPrime::maximal(n));
  } else {
    for (const auto& p : o.primes) primes.push_back(parse_monomial_prime(in.ring, p));
  }
  Json out = Json::array();
  Json anchors = Json::array();
  for (const auto& p : primes) {
    ExtInt inf = inf_at_prime(x, p);
    ExtInt dim = dim_at_prime(x, p);
    bool anchor = inf.is_finite() && dim == -inf;
    out.push_back({{"prime", p.to_string(*in.ring)},
                   {"in_support", inf.is_finite()},
                   {"inf", to_json(inf)},
                   {"dim", to_json(dim)},
                   {"anchor", anchor}});
    if (anchor) anchors.push_back(p.to_string(*in.ring));
  }
  return {{{"inf", to_json(x.inf())}, {"dim", to_json(foxby_dim(x))}, {"primes", out}, {"anchors", anchors}}};
}

CommandResult cmd_ldim(const InputObject& in, const CommandOptions& o) {
  ComplexAnalysis x(complex_of("ldim", in));
  auto pool = pool_of(in, o);
  DimensionReport d = ldim_or_unsupported(x, pool, limit_of(in, o));
  return {{{"inf", to_json(d.inf)},
           {"dim", to_json(d.foxby)},
           {"homology_dims", dims_json(d.homology_dims)},
           {"pool", strings(pool)},
           {"ldim", ldim_json(d)}}};
}

CommandResult cmd_sop(const InputObject& in, const CommandOptions& o) {
  auto seq = seq_of("sop", in, o);
  if (auto* a = std::get_if<KoszulPtr>(&in.value)) {
    ComplexAnalysis x(to_free_complex(**a));
    TheoremReport t = verify_theorem(*a, seq, ldim_or_unsupported(x, pool_of(in, o), limit_of(in, o)));
    Json r = certificate_json(t.certificate);
    r["h0_iso"] = t.h0_iso;
    r["ldim"] = ldim_json(t.ldim);
    return {r};
  }
  FreeComplex x = complex_of("sop", in);
  ComplexAnalysis ax(x);
  DimensionReport d = ldim_or_unsupported(ax, pool_of(in, o), limit_of(in, o));
  bool length = is_length_sequence(x, seq);
  std::optional<bool> length_sop;
  if (d.verdict == DimVerdict::Exact)
    length_sop = length && ExtInt(static_cast<long long>(seq.size())) == d.ldim_upper + d.inf.value();
  return {{{"sequence", strings(seq)},
           {"christensen_sop", christensen_json(is_sop_christensen(x, seq))},
           {"length_sequence", length},
           {"length_sop", optional_bool(length_sop)},
           {"ldim", ldim_json(d)}}};
}

CommandResult cmd_dgdim(const InputObject& in, const CommandOptions&) {
  DGAlgebra a = algebra_of("dgdim", in);
  ExtInt dg = dgdim(a);
  ExtInt h0 = module_dim(algebra_h0(a));
  return {{{"algebra", in.kind()}, {"dgdim", to_json(dg)}, {"dim_h0", to_json(h0)}, {"strict", h0 < dg}}};
}

CommandResult cmd_dgspec(const InputObject& in, const CommandOptions&) {
  DGAlgebra a = algebra_of("dgspec", in);
  Json primes = Json::array();
  for (const auto& j : dg_spec_enumerate(a)) {
    primes.push_back({{"ideal", j.to_string()},
                      {"degree_zero", strings(groebner_basis(j.degree_zero()))},
                      {"status", to_string(is_dg_prime_supported(j))}});
  }
  return {{{"algebra", in.kind()}, {"count", primes.size()}, {"dgdim", to_json(dgdim(a))}, {"primes", primes}}};
}

CommandResult cmd_localize(const InputObject& in, const CommandOptions& o) {
  auto* u = std::get_if<MultiplicativeSet>(&in.value);
  if (!u) throw WrongObject("localize-check", in);
  LocalizeOptions lo;
  lo.seed = o.seed;
  LocalizeReport rep = localize_check(*u, lo);
  Json props = Json::array();
  for (const auto& p : rep.properties) {
    Json j = {{"name", p.name},
              {"trials", p.trials},
              {"failures", p.failures},
              {"unknown", p.unknown},
              {"passed", p.passed()}};
    if (!p.counterexample.empty()) j["counterexample"] = p.counterexample;
    props.push_back(j);
  }
  Json gens = Json::array();
  for (const auto& g : u->generators()) gens.push_back(g.to_string());
  return {{{"generators", gens},
           {"closure_size", u->closure().size()},
           {"in_degree_zero", u->in_degree_zero()},
           {"odd_generator", u->has_odd_generator()},
           {"properties", props},
           {"passed", rep.passed()}},
          rep.passed() ? ExitCode::Ok : ExitCode::VerificationFailure};
}

CommandResult cmd_verify(const InputObject& in, const CommandOptions& o) {
  KoszulPtr a = koszul_of("verify-theorem", in);
  auto pool = pool_of(in, o);
  const std::size_t limit = limit_of(in, o);
  DimensionReport d = ldim_or_unsupported(ComplexAnalysis(to_free_complex(*a)), pool, limit);

  std::vector<std::vector<Polynomial>> candidates;
  if (o.seq) {
    candidates.push_back(parse_polynomial_list(in.ring, *o.seq));
  } else {
    // every subsequence of the pool of size <= limit, in pool order
    const std::size_t top = std::min(limit, pool.size());
    for (std::size_t len = 0; len <= top; ++len) {
      std::vector<std::size_t> idx(len);
      for (std::size_t k = 0; k < len; ++k) idx[k] = k;
      while (true) {
        std::vector<Polynomial> s;
        for (auto k : idx) s.push_back(pool[k]);
        candidates.push_back(std::move(s));
        std::size_t k = len;
        while (k > 0 && idx[k - 1] == pool.size() - len + k - 1) --k;
        if (k == 0) break;
        ++idx[k - 1];
        for (std::size_t j = k; j < len; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
  }

  Json instances = Json::array();
  Json discrepancies = Json::array();
  bool inconclusive = false;
  std::size_t sops = 0;
  TheoremReport first;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    TheoremReport t = verify_theorem(a, candidates[c], d);
    if (c == 0) first = t;
    inconclusive = inconclusive || t.inconclusive;
    for (const auto& msg : t.discrepancies)
      if (std::find(discrepancies.begin(), discrepancies.end(), Json(msg)) == discrepancies.end())
        discrepancies.push_back(msg);
    const auto& cert = t.certificate;
    if (cert.h0.holds()) ++sops;
    instances.push_back({{"sequence", strings(cert.sequence)},
                         {"christensen_sop", cert.christensen.holds()},
                         {"h0_sop", cert.h0.holds()},
                         {"length_sop", optional_bool(cert.length_sop)},
                         {"h0_iso", t.h0_iso}});
  }
  const bool passed = discrepancies.empty() && !inconclusive;
  return {{{"dgdim", to_json(first.dgdim)},
           {"ldim", ldim_json(d)},
           {"dim", to_json(first.foxby)},
           {"dim_h0", to_json(first.dim_h0)},
           {"dims_equal", first.dims_equal},
           {"candidates", candidates.size()},
           {"systems_of_parameters", sops},
           {"inconclusive", inconclusive},
           {"discrepancies", discrepancies},
           {"passed", passed},
           {"instances", instances}},
          discrepancies.empty() ? ExitCode::Ok : ExitCode::VerificationFailure};
}

using Handler = CommandResult (*)(const InputObject&, const CommandOptions&);

const std::vector<std::pair<std::string, Handler>>& handlers() {
  static const std::vector<std::pair<std::string, Handler>> table = {
      {"homology", cmd_homology}, {"dim", cmd_dim},       {"ldim", cmd_ldim},
      {"anchor", cmd_anchor},     {"sop", cmd_sop},       {"dgdim", cmd_dgdim},
      {"dgspec", cmd_dgspec},     {"localize-check", cmd_localize}, {"verify-theorem", cmd_verify}};
  return table;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, _] : handlers()) v.push_back(name);
    v.push_back("corpus");
    return v;
  }();
  return names;
}

CommandOptions CommandOptions::from_json(const Json& j) {
  CommandOptions o;
  if (!j.is_object()) throw InputError("options", "expected an object");
  auto csv = [](const Json& a, const std::string& key) {
    if (a.is_string()) return a.get<std::string>();
    if (!a.is_array()) throw InputError("options." + key, "expected an array of strings");
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i].is_string()) throw InputError("options." + key, "expected an array of strings");
      s += (i ? "," : "") + a[i].get<std::string>();
    }
    return s;
  };
  auto natural = [](const Json& v) { return v.is_number_integer() && v.get<long long>() >= 0; };
  for (const auto& [key, v] : j.items()) {
    if (key == "seed" && natural(v)) {
      o.seed = v.get<std::uint64_t>();
    } else if (key == "forms" && natural(v)) {
      o.forms = v.get<std::size_t>();
    } else if (key == "limit" && natural(v)) {
      o.limit = v.get<std::size_t>();
    } else if (key == "pool") {
      o.pool = csv(v, key);
    } else if (key == "seq") {
      o.seq = csv(v, key);
    } else if (key == "primes" && v.is_array()) {
      for (const auto& p : v) {
        if (!p.is_string()) throw InputError("options.primes", "expected strings");
        o.primes.push_back(p.get<std::string>());
      }
    } else if (key == "all_primes" && v.is_boolean()) {
      o.all_primes = v.get<bool>();
    } else {
      throw InputError("options." + key, "unknown option or wrong type");
    }
  }
  return o;
}

CommandResult run_command(const std::string& command, const InputObject& input, const CommandOptions& options) {
  Json head = {{"command", command}, {"object", input.kind()}};
  CommandResult r;
  auto failed = [&](ExitCode code, const char* kind, const std::string& msg) {
    r.report = head;
    r.report["error"] = kind;
    r.report["message"] = msg;
    r.exit = code;
  };
  auto it = std::find_if(handlers().begin(), handlers().end(), [&](const auto& h) { return h.first == command; });
  if (it == handlers().end()) {
    failed(ExitCode::ParseError, "invalid-input", "unknown command '" + command + "'");
    return r;
  }
  try {
    r = it->second(input, options);
    Json body = std::move(r.report);
    r.report = head;
    r.report.update(body);
  } catch (const UnsupportedInput& e) {
    failed(ExitCode::Unsupported, "unsupported", e.what());
  } catch (const InputError& e) {
    failed(ExitCode::ParseError, "invalid-input", e.what());
  } catch (const PreconditionError& e) {
    failed(ExitCode::ParseError, "invalid-input", e.what());
  } catch (const StructuralError& e) {
    failed(ExitCode::ParseError, "invalid-input", e.what());
  }
  return r;
}

}  // namespace dgk
