#include "support.hpp"

#include "cli.hpp"
#include "mocklab/errors.hpp"

#include <doctest.h>

#include <cstdlib>
#include <sstream>

using namespace mocklab;
using testing::R;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("number parsing") {
  PrecisionScope scope(256);
  CHECK(testing::dist(cli::parse_real("pi"), pi()) == 0.0);
  CHECK(testing::dist(cli::parse_real("2pi"), 2 * pi()) == 0.0);
  CHECK(testing::dist(cli::parse_real("pi/2"), pi() / 2) == 0.0);
  CHECK(testing::dist(cli::parse_real("-3pi/4"), -3 * pi() / 4) < 1e-70);
  CHECK(testing::dist(cli::parse_real("1e-4"), R("1e-4")) == 0.0);
  CHECK(testing::dist(cli::parse_complex("1+0.5i"), Complex(Real(1), R("0.5"))) == 0.0);
  CHECK(testing::dist(cli::parse_complex("0.2 + 1.1i"), Complex(R("0.2"), R("1.1"))) == 0.0);
  CHECK(testing::dist(cli::parse_complex("-i"), Complex(Real(0), Real(-1))) == 0.0);
  CHECK(testing::dist(cli::parse_complex("2i"), Complex(Real(0), Real(2))) == 0.0);
  CHECK(testing::dist(cli::parse_complex("1e-3-2e-3i"), Complex(R("1e-3"), R("-2e-3"))) == 0.0);
  CHECK(testing::dist(cli::parse_complex("pi"), Complex(pi())) == 0.0);
  CHECK_THROWS_AS(cli::parse_real("p1"), DomainError);
  CHECK(cli::parse_real_list("0.2,0.1").size() == 2);
}

TEST_CASE("grid files") {
  PrecisionScope scope(256);
  const auto g = cli::parse_grid(R"([{"re": 0, "im": 1, "as": "tau"}, {"re": "pi", "im": 0, "as": "alpha"}])");
  REQUIRE(g.size() == 2);
  CHECK(g[0].is_tau);
  CHECK(testing::dist(g[1].value, Complex(pi())) == 0.0);
  CHECK_THROWS_AS(cli::parse_grid(R"([{"re": 0, "im": 1}])"), DomainError);
  CHECK_THROWS_AS(cli::parse_grid("[]"), DomainError);
  CHECK_THROWS_AS(cli::parse_grid("{"), DomainError);
}

TEST_CASE("eval") {
  Run r = run({"eval", "--fn", "chi0", "--q", "0", "--format", "csv"});
  CHECK(r.code == cli::ok);
  CHECK(r.out.find("chi0,1.0000") != std::string::npos);
  r = run({"eval", "--fn", "lvec", "--alpha", "pi", "--prec", "128"});
  CHECK(r.code == cli::ok);
  CHECK(r.out.find("lvec_1 = ") != std::string::npos);
  CHECK(r.out.find("fixed_point_residual") != std::string::npos);
  CHECK(run({"eval", "--fn", "chi0", "--q", "1.5"}).code == cli::domain);
  CHECK(run({"eval", "--fn", "nope", "--q", "0.1"}).code == cli::domain);
  CHECK(run({"eval", "--fn", "eta", "--tau", "-i"}).code == cli::domain);
}

TEST_CASE("precision from the environment") {
  ::setenv("MOCKLAB_PREC", "96", 1);
  Run r = run({"eval", "--fn", "eta", "--tau", "i", "--format", "json"});
  ::unsetenv("MOCKLAB_PREC");
  CHECK(r.code == cli::ok);
  CHECK(r.out.find("\"prec_bits\": 96") != std::string::npos);
}

TEST_CASE("coeffs") {
  CHECK(run({"coeffs", "--fn", "f", "--n", "2"}).out == "0,1,1\n1,1,1\n2,-2,1\n");
  CHECK(run({"coeffs", "--fn", "partition", "--n", "2"}).out == "0,1,1\n1,1,1\n2,2,1\n");
  CHECK(run({"coeffs", "--fn", "chi0", "--n", "0"}).out == "0,1,1\n");
  CHECK(run({"coeffs", "--fn", "chi5", "--n", "2"}).code == cli::domain);
}

TEST_CASE("verify and stokes guards") {
  Run r = run({"verify", "--suite", "algebra"});
  CHECK(r.code == cli::ok);
  CHECK(r.out.find("\"all_pass\": true") != std::string::npos);
  CHECK(run({"verify", "--suite", "mf5", "--grid", R"([{"re": 0, "im": -1, "as": "tau"}])"}).code ==
        cli::domain);
  CHECK(run({"verify", "--suite", "bogus"}).code == cli::domain);
  CHECK(run({"stokes", "--eps-seq", "0.0001"}).code == cli::domain);
  CHECK(run({"stokes", "--eps-seq", "0.1,0.2"}).code == cli::domain);
}
