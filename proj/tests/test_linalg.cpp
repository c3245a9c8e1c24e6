#include <algorithm>
#include <set>

#include "doctest.h"
#include "wittcenter/linalg.hpp"
#include "wittcenter/random.hpp"

using namespace wittcenter;

namespace {

ModMatrix random_matrix(Rng& rng, unsigned p, unsigned k, std::size_t rows, std::size_t cols) {
  const std::uint64_t q = checked_prime_power(p, k);
  ModMatrix m(p, k, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    ModRow r(cols);
    // a power of p times a random row keeps small matrices from being free
    const std::uint64_t scale = checked_prime_power(p, uniform(rng, 0, k - 1));
    for (auto& x : r) x = std::uniform_int_distribution<std::uint64_t>(0, q - 1)(rng) * scale % q;
    m.add_row(r);
  }
  return m;
}

ModRow times(const ModRow& v, const ModMatrix& a) {
  ModRow out(a.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out[j] = add_mod(out[j], mul_mod(v[i], a.row(i)[j], a.modulus()), a.modulus());
    }
  }
  return out;
}

// Every vector of (Z/q)^n, as rows.
std::vector<ModRow> all_vectors(std::uint64_t q, std::size_t n) {
  std::vector<ModRow> out{ModRow()};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<ModRow> next;
    for (const auto& v : out) {
      for (std::uint64_t c = 0; c < q; ++c) {
        auto w = v;
        w.push_back(c);
        next.push_back(w);
      }
    }
    out = std::move(next);
  }
  return out;
}

std::set<ModRow> span(const ModMatrix& a) {
  std::set<ModRow> out;
  for (const auto& v : all_vectors(a.modulus(), a.rows())) out.insert(times(v, a));
  if (a.rows() == 0) out.insert(ModRow(a.cols(), 0));
  return out;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("Howell form is canonical") {
  Rng rng(31);
  for (unsigned p : {2U, 3U}) {
    for (unsigned k = 1; k <= 3; ++k) {
      for (int t = 0; t < 30; ++t) {
        const ModMatrix a = random_matrix(rng, p, k, uniform(rng, 1, 5), uniform(rng, 1, 5));
        // same span: unit multiples, row combinations, shuffled order
        std::vector<ModRow> rows = a.data();
        const std::uint64_t q = a.modulus();
        for (auto& r : rows) {
          std::uint64_t u;
          do u = std::uniform_int_distribution<std::uint64_t>(1, q - 1)(rng);
          while (u % p == 0);
          for (auto& x : r) x = mul_mod(x, u, q);
        }
        for (std::size_t i = 1; i < rows.size(); ++i) {
          const std::uint64_t c = std::uniform_int_distribution<std::uint64_t>(0, q - 1)(rng);
          for (std::size_t j = 0; j < a.cols(); ++j) {
            rows[i][j] = add_mod(rows[i][j], mul_mod(c, rows[0][j], q), q);
          }
        }
        std::shuffle(rows.begin(), rows.end(), rng);
        ModMatrix b(p, k, a.cols());
        for (const auto& r : rows) b.add_row(r);
        b.add_row(ModRow(a.cols(), 0));
        CHECK(howell_form(a) == howell_form(b));
        CHECK(howell_form(howell_form(a)) == howell_form(a));
      }
    }
  }
}

TEST_CASE("Howell form spans the same module") {
  Rng rng(32);
  for (int t = 0; t < 20; ++t) {
    const unsigned p = t % 2 ? 2 : 3;
    const ModMatrix a = random_matrix(rng, p, 2, uniform(rng, 1, 3), 2);
    CHECK(span(a) == span(howell_form(a)));
  }
}

TEST_CASE("left kernel against enumeration") {
  Rng rng(33);
  for (int t = 0; t < 20; ++t) {
    const unsigned p = t % 2 ? 2 : 3;
    const ModMatrix a = random_matrix(rng, p, 2, uniform(rng, 1, 3), 2);
    std::set<ModRow> brute;
    for (const auto& v : all_vectors(a.modulus(), a.rows())) {
      if (times(v, a) == ModRow(a.cols(), 0)) brute.insert(v);
    }
    const ModMatrix k = left_kernel(a);
    CHECK(k.cols() == a.rows());
    CHECK(span(k) == brute);
  }
}

TEST_CASE("solving and reduction") {
  Rng rng(34);
  for (int t = 0; t < 40; ++t) {
    const unsigned p = t % 2 ? 2 : 5;
    const ModMatrix a = random_matrix(rng, p, 3, uniform(rng, 1, 4), uniform(rng, 1, 4));
    const ModMatrix h = howell_form(a);
    ModRow v(a.rows());
    for (auto& x : v) x = std::uniform_int_distribution<std::uint64_t>(0, a.modulus() - 1)(rng);
    const ModRow inside = times(v, a);
    const auto sol = solve_left(a, inside);
    REQUIRE(sol);
    CHECK(times(*sol, a) == inside);
    CHECK(reduce_by_howell(h, inside) == ModRow(a.cols(), 0));
    ModRow other(a.cols());
    for (auto& x : other) x = std::uniform_int_distribution<std::uint64_t>(0, a.modulus() - 1)(rng);
    const bool member = reduce_by_howell(h, other) == ModRow(a.cols(), 0);
    CHECK(member == solve_left(a, other).has_value());
  }
}

TEST_CASE("pivots") {
  CHECK(pivot_column({0, 0, 3}) == 2);
  CHECK(pivot_column({0, 0}) == 2);
  ModMatrix m(2, 2, 2);
  m.add_row({6, 5});
  CHECK(m.row(0) == ModRow{2, 1});
}

}
