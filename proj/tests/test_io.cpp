#include <doctest.h>

#include <set>

#include "dgk/io.hpp"

using namespace dgk;

namespace {

Json doc(Json ring, const std::string& object, Json data) {
  return {{"schema_version", 1}, {"ring", std::move(ring)}, {"object", object}, {"data", std::move(data)}};
}

Json free_line() {
  return doc({{"vars", {"T"}}}, "complex",
             {{"lo", 0}, {"ranks", {1, 2}}, {"differentials", Json::array({Json::array({Json::array({"0", "T"})})})}});
}

Json koszul_doc(std::vector<std::string> vars, std::vector<std::string> seq) {
  return doc({{"vars", vars}}, "koszul", {{"sequence", seq}});
}

std::string where_of(const Json& d) {
  try {
    parse_input(d);
  } catch (const InputError& e) {
    return e.where();
  }
  return "<parsed>";
}

CommandResult run(const std::string& command, const Json& d, CommandOptions o = {}) {
  return run_command(command, parse_input(d), o);
}

}  // namespace

TEST_CASE("input objects") {
  CHECK(std::string(parse_input(free_line()).kind()) == "complex");
  CHECK(std::string(parse_input(koszul_doc({"x", "y"}, {"x"})).kind()) == "koszul");
  InputObject t = parse_input(doc({{"vars", Json::array()}, {"field", "GF(7)"}}, "trivial_diff_algebra", {{"degree", 4}}));
  CHECK(std::string(t.kind()) == "trivial_diff_algebra");
  CHECK(std::get<TrivialPtr>(t.value)->generator_degree() == 4);
  InputObject u = parse_input(doc({{"vars", {"x", "y"}}}, "mult_set",
                                  {{"sequence", {"x", "y"}},
                                   {"generators", Json::array({"1+x", Json::array({{{"e", {1}}, {"c", "1"}}})})}}));
  CHECK(std::get<MultiplicativeSet>(u.value).has_odd_generator());
  InputObject lex = parse_input(doc({{"vars", {"a", "b"}}, {"order", "lex"}}, "koszul", {{"sequence", {"a"}}}));
  CHECK(lex.ring->order() == MonomialOrder::lex());
  InputObject w = parse_input(doc({{"vars", {"a", "b"}}, {"order", {{"weights", {2, 1}}}}}, "koszul", {{"sequence", {"a"}}}));
  CHECK(w.ring->order().kind() == MonomialOrder::Kind::Weight);
}

TEST_CASE("input errors carry their location") {
  CHECK(where_of(Json::array()) == "");
  Json d = koszul_doc({"x", "y"}, {"x", "y + q"});
  CHECK(where_of(d) == "data.sequence[1]");
  d["schema_version"] = 2;
  CHECK(where_of(d) == "schema_version");
  CHECK(where_of(koszul_doc({"x", "x"}, {"x"})) == "ring");
  CHECK(where_of(koszul_doc({"x"}, {"x + 1"})) == "data.sequence");
  Json f = free_line();
  f["data"]["differentials"][0][0] = Json::array({"T"});
  CHECK(where_of(f) == "data.differentials[0][0]");
  f = free_line();
  f["data"]["ranks"] = {1, 2, 1};
  CHECK(where_of(f) == "data.differentials");
  f = free_line();
  f.erase("object");
  CHECK(where_of(f) == "object");
  f = free_line();
  f["object"] = "sheaf";
  CHECK(where_of(f) == "object");
  f = free_line();
  f["ring"]["field"] = "GF(6)";
  CHECK(where_of(f) == "ring.field");
  f = free_line();
  f["ring"]["order"] = "deglex";
  CHECK(where_of(f) == "ring.order");
  // d^2 != 0
  Json bad = doc({{"vars", {"x"}}}, "complex",
                 {{"ranks", {1, 1, 1}}, {"differentials", Json::array({Json::array({Json::array({"x"})}),
                                                                       Json::array({Json::array({"x"})})})}});
  CHECK(where_of(bad) == "data.differentials");
  CHECK(where_of(doc({{"vars", {"x"}}}, "trivial_diff_algebra", Json::object())) == "ring.vars");
  CHECK(where_of(doc({{"vars", Json::array()}}, "trivial_diff_algebra", {{"degree", 3}})) == "data");
  Json m = doc({{"vars", {"x", "y"}}}, "mult_set",
               {{"sequence", {"x", "y"}}, {"generators", Json::array({Json::array({{{"e", {3}}}})})}});
  CHECK(where_of(m) == "data.generators[0][0].e[0]");
  m["data"]["generators"] = Json::array({Json::array({{{"e", {1}}}, {{"e", {1, 2}}}})});
  CHECK(where_of(m) == "data.generators[0]");
}

TEST_CASE("option parsing") {
  auto r = make_ring({"x", "y"});
  CHECK(parse_polynomial_list(r, "").empty());
  CHECK(parse_polynomial_list(r, "x, x*y+1").size() == 2);
  CHECK_THROWS_AS(parse_polynomial_list(r, "x,,y"), InputError);
  CHECK(parse_monomial_prime(r, "").mask == 0);
  CHECK(parse_monomial_prime(r, "(0)").mask == 0);
  CHECK(parse_monomial_prime(r, "y").mask == 2);
  CHECK(parse_monomial_prime(r, "(x, y)").mask == 3);
  CHECK_THROWS_AS(parse_monomial_prime(r, "z"), InputError);

  CommandOptions o = CommandOptions::from_json({{"seed", 4}, {"pool", {"x", "y"}}, {"seq", Json::array()},
                                                {"limit", 1}, {"primes", {"x"}}, {"all_primes", true}});
  CHECK(o.seed == 4);
  CHECK(*o.pool == "x,y");
  CHECK(o.seq->empty());
  CHECK(*o.limit == 1);
  CHECK(o.all_primes);
  CHECK_THROWS_AS(CommandOptions::from_json({{"sede", 4}}), InputError);
  CHECK_THROWS_AS(CommandOptions::from_json({{"limit", -1}}), InputError);
}

TEST_CASE("subset matching") {
  Json actual = {{"a", 1}, {"b", {{"c", "x"}, {"d", {1, 2}}}}};
  CHECK_FALSE(json_subset_mismatch({{"a", 1}}, actual));
  CHECK_FALSE(json_subset_mismatch({{"b", {{"d", {1, 2}}}}}, actual));
  CHECK(*json_subset_mismatch({{"b", {{"d", {1}}}}}, actual) == "b.d");
  CHECK(*json_subset_mismatch({{"b", {{"c", "y"}}}}, actual) == "b.c");
  CHECK(*json_subset_mismatch({{"e", 0}}, actual) == "e");
  CHECK(*json_subset_mismatch({{"b", {{"d", {1, 3}}}}}, actual) == "b.d[1]");
}

TEST_CASE("commands on the free line") {
  CommandResult d = run("dim", free_line());
  CHECK(d.exit == ExitCode::Ok);
  CHECK(d.report["inf"] == 0);
  CHECK(d.report["dim"] == 0);
  CHECK(d.report["support_is_everything"] == true);
  CommandResult l = run("ldim", free_line());
  CHECK(l.report["ldim"]["upper"] == 1);
  CHECK(l.report["ldim"]["verdict"] == "exact");
  CommandOptions seq;
  seq.seq = "T";
  CHECK(run("sop", free_line(), seq).report["length_sop"] == true);
  CHECK(run("sop", free_line()).exit == ExitCode::ParseError);
  CHECK(run("dgdim", free_line()).exit == ExitCode::Unsupported);
  CHECK(run("localize-check", free_line()).exit == ExitCode::Unsupported);
  CHECK(run("transmogrify", free_line()).exit == ExitCode::ParseError);
  CommandOptions all;
  all.all_primes = true;
  CommandResult a = run("anchor", free_line(), all);
  CHECK(a.report["anchors"] == Json({"(0)", "(T)"}));
}

TEST_CASE("exit codes") {
  CommandOptions p;
  p.primes = {"x"};
  CommandResult u = run("anchor", koszul_doc({"x", "y"}, {"x^2-y^2"}), p);
  CHECK(u.exit == ExitCode::Unsupported);
  CHECK(u.report["error"] == "unsupported");
  CHECK(run("dgspec", koszul_doc({"x", "y"}, {"x+y"})).exit == ExitCode::Unsupported);
  CommandOptions bad_pool;
  bad_pool.pool = "x+1";
  CHECK(run("ldim", koszul_doc({"x", "y"}, {"x"}), bad_pool).exit == ExitCode::ParseError);
  Json exact = doc({{"vars", {"x"}}}, "complex",
                   {{"ranks", {1, 1}}, {"differentials", Json::array({Json::array({Json::array({"1"})})})}});
  CHECK(run("ldim", exact).exit == ExitCode::Unsupported);
  CHECK(run("dim", exact).report["inf"] == "+inf");
}

TEST_CASE("verify-theorem report") {
  CommandResult r = run("verify-theorem", koszul_doc({"x", "y"}, {"x"}));
  CHECK(r.exit == ExitCode::Ok);
  CHECK(r.report["passed"] == true);
  CHECK(r.report["dgdim"] == 1);
  CHECK(r.report["dim_h0"] == 1);
  CHECK(r.report["candidates"] == 4);
  // sops among (), (x), (y), (x, y): only (y)
  CHECK(r.report["systems_of_parameters"] == 1);
  CommandOptions o;
  o.pool = "x";
  CommandResult i = run("verify-theorem", koszul_doc({"x", "y"}, {"x"}), o);
  CHECK(i.report["inconclusive"] == true);
  CHECK(i.exit == ExitCode::Ok);
}

TEST_CASE("reports are deterministic") {
  CommandOptions o;
  o.seed = 12;
  o.forms = 3;
  Json d = koszul_doc({"x", "y", "z"}, {"x*y"});
  CHECK(run("verify-theorem", d, o).report.dump() == run("verify-theorem", d, o).report.dump());
  Json u = doc({{"vars", {"x", "y"}}}, "mult_set", {{"sequence", {"x", "y"}}, {"generators", {"1+x"}}});
  CHECK(run("localize-check", u, o).report.dump() == run("localize-check", u, o).report.dump());
  CHECK(render_text(run("ldim", d, o).report) == render_text(run("ldim", d, o).report));
}

TEST_CASE("text rendering") {
  Json r = {{"command", "dim"}, {"inf", 0}, {"list", {"a", "b"}}, {"rows", Json::array({{{"k", 1}}})}};
  CHECK(render_text(r) == "command: dim\ninf: 0\nlist: [a, b]\nrows:\n  - k=1\n");
}

TEST_CASE("bundled corpus") {
  CommandResult all = run_corpus({DGK_CORPUS_DIR, "*", false});
  CHECK(all.exit == ExitCode::Ok);
  CHECK(all.report["count"].get<std::size_t>() >= 12);
  CHECK(all.report["passed"] == all.report["count"]);
  std::set<std::string> provenance, names;
  std::vector<std::string> order;
  for (const auto& e : all.report["entries"]) {
    provenance.insert(e["provenance"].get<std::string>());
    names.insert(e["name"].get<std::string>());
    order.push_back(e["name"].get<std::string>());
  }
  CHECK(std::is_sorted(order.begin(), order.end()));
  CHECK(names.size() == order.size());
  CHECK(provenance == std::set<std::string>{"derived-fixture", "paper-example"});

  CommandResult ex = run_corpus({DGK_CORPUS_DIR, "example-3.*", false});
  CHECK(ex.report["count"] == 2);
  CHECK(ex.report["passed"] == 2);
  CommandResult none = run_corpus({DGK_CORPUS_DIR, "zzz*", false});
  CHECK(none.exit == ExitCode::Ok);
  CHECK(none.report["count"] == 0);
  CHECK(run_corpus({"/nonexistent-corpus", "*", false}).exit == ExitCode::ParseError);
  CHECK(all.report.dump() == run_corpus({DGK_CORPUS_DIR, "*", false}).report.dump());
}
