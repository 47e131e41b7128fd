#include <doctest.h>

#include "twistkit/displays.hpp"
#include "twistkit/hopf.hpp"
#include "twistkit/parser.hpp"
#include "twistkit/poincare.hpp"
#include "twistkit/registry.hpp"
#include "twistkit/render.hpp"
#include "twistkit/star.hpp"
#include "twistkit/suite.hpp"

using namespace twistkit;

namespace {

const TruncationPolicy kPol = TruncationPolicy::defaults();

std::map<std::string, ReportEntry> by_id(const Report& r) {
  std::map<std::string, ReportEntry> out;
  for (const auto& e : r) out[e.id] = e;
  return out;
}

nlohmann::json without_timing(nlohmann::json j) {
  for (auto& e : j["entries"]) e.erase("seconds");
  return j;
}

}  // namespace

TEST_CASE("parser examples") {
  auto p = kappa_poincare_algebra(kPol);
  CHECK(parse_element("M[1,2]*P[1]", *p) == p->multiply(M(1, 2), P(1)));
  CHECK(parse_tensor2("P[1] ox exp(-kinv*P[0]) + 1 ox P[1]", *p) == coproduct(kappa_poincare(kPol), P(1)));
  CHECK(render_text(parse_expression("P[1]*P[2]", *p)) == "P[1]*P[2]");
  CHECK(render_text(parse_element("-I*P[2]", *p)) == "-I*P[2]");
  CHECK(parse_element("P[2]*P[1]", *p) == parse_element("P[1]*P[2]", *p));
  CHECK(parse_element("P[1]*M[1,2]", *p) == p->multiply(P(1), M(1, 2)));
  CHECK(parse_element("kinv^2*P[0]/2", *p) == P(0).scaled(Scalar(GaussRat(ratio(1, 2)), ParamMono::of(Param::kinv, 2))));
  CHECK(rank_of(parse_expression("P[0] ox P[1] ox P[2]", *p)) == 3);
  CHECK(parse_element("M[2,1]", *p) == -M(1, 2));
  // Orders beyond the truncation policy drop out.
  CHECK(parse_element("kinv^9*P[1]", *p).is_zero());
}

TEST_CASE("parser errors") {
  auto p = kappa_poincare_algebra(kPol);
  CHECK_THROWS_AS(parse_element("M[1,1]", *p), ParseError);
  CHECK_THROWS_AS(parse_element("P[4]", *p), ParseError);
  CHECK_THROWS_AS(parse_element("Q[1]", *p), ParseError);
  CHECK_THROWS_AS(parse_element("x[1]", *p), ParseError);
  CHECK_THROWS_AS(parse_element("P[1] +", *p), ParseError);
  CHECK_THROWS_AS(parse_element("exp(1 + P[0])", *p), ParseError);
  CHECK_THROWS_AS(parse_element("P[1]/P[2]", *p), ParseError);
  CHECK_THROWS_AS(parse_element("P[1] ox P[2]", *p), ParseError);
  try {
    parse_element("P[1] * * P[2]", *p);
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("7") != std::string::npos);
  }
}

TEST_CASE("structured rendering") {
  const nlohmann::json j = render_structured(X(1).scaled(Scalar::param(Param::kinv)));
  CHECK(j["rank"] == 1);
  REQUIRE(j["terms"].size() == 1);
  const auto& t = j["terms"][0];
  CHECK(t["coefficient"]["re"] == "1");
  CHECK(t["coefficient"]["im"] == "0");
  CHECK(t["coefficient"]["params"] == nlohmann::json{{"kinv", 1}});
  CHECK(t["word"] == nlohmann::json::array({"x[1]"}));
  CHECK(render_structured(X(1)).dump() == render_structured(X(1)).dump());
}

TEST_CASE("registry") {
  CHECK(hopf_names().size() == 7);
  for (const auto& n : algebra_names()) CHECK(registered_algebra(n, kPol) != nullptr);
  CHECK_THROWS_AS(registered_hopf("nope", kPol), RegistryError);
  CHECK_THROWS_AS(registered_rmatrix("r_nope"), RegistryError);
  CHECK(registered_rmatrix("r_total") == r_kappa() + r_kappa_hat() + r_xi());
  CHECK(registry_roundtrip_failures(kPol).empty());
}

TEST_CASE("twisted display comparisons") {
  const auto rep = by_id(check_twisted_coproducts(kPol));
  for (const char* id : {"twist.coproduct.xi.P[0]", "twist.coproduct.xi.P[1]", "twist.coproduct.xi.P[2]", "twist.coproduct.xi.P[3]",
                         "twist.coproduct.xi.M[1,2]", "twist.coproduct.xi.M[1,3]", "twist.coproduct.xi.M[2,3]",
                         "twist.coproduct.hat.P[0]", "twist.coproduct.hat.P[3]"})
    CHECK_MESSAGE(rep.at(id).status == Status::pass, id);
  CHECK(rep.at("twist.coproduct.hat.M[1,2]").status == Status::flagged);
  // Known display slips: the notes name the order at which they first show.
  CHECK(rep.at("twist.coproduct.xi.M[1,0]").status == Status::fail);
  CHECK(rep.at("twist.coproduct.xi.M[1,0]").note.find("kinv*xi") != std::string::npos);
  CHECK(rep.at("twist.coproduct.hat.P[1]").status == Status::fail);
  CHECK(rep.at("twist.coproduct.hat.P[1]").note.find("khinv^2") != std::string::npos);

  const auto ant = by_id(check_twisted_antipodes(kPol));
  for (const auto& [id, e] : ant) {
    if (id.rfind("twist.antipode.hat.", 0) == 0 || id.find(".P[") != std::string::npos || id == "twist.antipode.xi.M[1,2]")
      CHECK_MESSAGE(e.status == Status::pass, id);
  }
  CHECK(ant.at("twist.antipode.xi.M[1,3]").status == Status::fail);
  CHECK(ant.at("twist.antipode.xi.M[1,3]").note == "computed deformation = 1/2 x printed");
  CHECK(ant.at("twist.u.xi").status == Status::fail);
}

TEST_CASE("verify suite selection and order bookkeeping") {
  SuiteConfig c;
  c.sections = {"star"};
  const Report star = run_verify_suite(c);
  CHECK(star.size() == 18);
  for (const auto& e : star) CHECK(e.status == Status::pass);
  CHECK_FALSE(any_failure(star));

  c.sections = {"ybe"};
  for (const auto& e : run_verify_suite(c)) CHECK_MESSAGE(e.status == Status::pass, e.id);

  c.sections = {"twist"};
  c.policy.set(Param::kinv, 1);
  for (const auto& e : run_verify_suite(c)) CHECK(e.orders.find("kinv:1") != std::string::npos);

  c.sections = {"star", "bogus"};
  CHECK_THROWS_AS(run_verify_suite(c), RegistryError);
}

TEST_CASE("verify suite is deterministic") {
  SuiteConfig a;
  a.sections = {"ybe", "cocycle", "star", "poisson", "casimir", "registry"};
  a.jobs = 1;
  SuiteConfig b = a;
  b.jobs = 3;
  const Report ra = run_verify_suite(a), rb = run_verify_suite(b);
  CHECK(without_timing(report_json(ra)).dump() == without_timing(report_json(rb)).dump());
  for (std::size_t i = 1; i < ra.size(); ++i) CHECK(ra[i - 1].id <= ra[i].id);
}

TEST_CASE("report formats") {
  Report r(3);
  r[0].id = "a.pass";
  r[1].id = "b.fail";
  r[1].status = Status::fail;
  r[1].residual = "P[1]";
  r[2].id = "c.flag";
  r[2].status = Status::flagged;
  r[2].note = "both forms";
  const nlohmann::json j = report_json(r, {{"command", "x"}});
  CHECK(j["schema"] == "twistkit.report");
  CHECK(j["version"] == kReportSchemaVersion);
  CHECK(j["summary"]["pass"] == 1);
  CHECK(j["summary"]["fail"] == 1);
  CHECK(j["summary"]["flagged"] == 1);
  CHECK(j["entries"][1]["status"] == "fail");
  const std::string text = report_text(r);
  CHECK(text.find("FAIL    b.fail") != std::string::npos);
  CHECK(text.find("residual: P[1]") != std::string::npos);
  CHECK(text.find("3 entries: 1 pass, 1 fail, 1 flagged") != std::string::npos);
  CHECK(any_failure(r));
  r.erase(r.begin() + 1);
  CHECK_FALSE(any_failure(r));
}
