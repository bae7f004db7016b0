#include <random>
#include <vector>

#include "capmatch/kernels.hpp"
#include "doctest.h"

using namespace capmatch;

namespace {

std::vector<Cost> random_costs(std::mt19937_64& rng, std::size_t n) {
  std::vector<Cost> v(n);
  for (auto& c : v) c = rng() % 7 == 0 ? Cost::unreachable() : Cost(static_cast<std::int64_t>(rng() % 1000));
  return v;
}

}  // namespace

TEST_SUITE("kernels") {
  TEST_CASE("window minima on a small vector") {
    const std::vector<Cost> in{Cost(5), Cost(3), Cost::unreachable(), Cost(4), Cost(9)};
    std::vector<Cost> out(6);
    kernels::trailing_min(in, 2, out);
    CHECK(out == std::vector<Cost>{Cost(5), Cost(3), Cost(3), Cost(4), Cost(4), Cost(9)});
    std::vector<Cost> lead(5);
    kernels::leading_min(in, 2, lead);
    CHECK(lead == std::vector<Cost>{Cost(3), Cost(3), Cost(4), Cost(4), Cost(9)});
    std::vector<Cost> pre(5);
    kernels::prefix_min(in, pre);
    CHECK(pre == std::vector<Cost>{Cost(5), Cost(3), Cost(3), Cost(3), Cost(3)});
    std::vector<Cost> v{Cost(1), Cost::unreachable(), Cost(1)};
    kernels::add_linear(v, 10);
    CHECK(v == std::vector<Cost>{Cost(1), Cost::unreachable(), Cost(21)});
  }

  TEST_CASE("fast kernels match the reference loops") {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 400; ++rep) {
      const std::size_t n = 1 + rng() % 300;
      const std::size_t width = 1 + rng() % 40;
      const std::size_t out_n = n + rng() % 5;
      const auto in = random_costs(rng, n);
      for (int threads : {1, 3}) {
        std::vector<Cost> a(out_n), b(out_n);
        kernels::trailing_min(in, width, a, threads);
        kernels::reference::trailing_min(in, width, b);
        CHECK(a == b);
        std::vector<Cost> c(n), d(n);
        kernels::leading_min(in, width, c, threads);
        kernels::reference::leading_min(in, width, d);
        CHECK(c == d);
        auto e = in, f = in;
        kernels::add_linear(e, 13, threads);
        kernels::reference::add_linear(f, 13);
        CHECK(e == f);
      }
      std::vector<Cost> p(n), q(n);
      kernels::prefix_min(in, p);
      kernels::reference::prefix_min(in, q);
      CHECK(p == q);
    }
  }

  TEST_CASE("parallel path on long vectors") {
    std::mt19937_64 rng(11);
    const auto in = random_costs(rng, 50000);
    for (std::size_t width : {3, 64, 1000}) {
      std::vector<Cost> a(in.size()), b(in.size());
      kernels::trailing_min(in, width, a, 4);
      kernels::reference::trailing_min(in, width, b);
      CHECK(a == b);
      kernels::leading_min(in, width, a, 4);
      kernels::reference::leading_min(in, width, b);
      CHECK(a == b);
    }
  }

  TEST_CASE("cost arithmetic absorbs unreachable") {
    const Cost u = Cost::unreachable();
    CHECK_FALSE((u + Cost(3)).reachable());
    CHECK_FALSE((Cost(3) + u).reachable());
    CHECK_FALSE((u + std::int64_t{5}).reachable());
    CHECK(min(u, Cost(1000000)) == Cost(1000000));
    CHECK(Cost(2) < u);
    CHECK_THROWS_AS(u.value(), std::logic_error);
  }
}
