#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "fcomp/tables.hpp"

using namespace fcomp;

namespace {

std::vector<level_t> lv(std::initializer_list<int> xs) {
  std::vector<level_t> out;
  for (int x : xs)
    out.push_back(static_cast<level_t>(x));
  return out;
}

// Deterministic random tables for property checks.
truth_table random_table(std::mt19937& rng, domain dom, int arity) {
  std::uniform_int_distribution<int> dist(0, dom.levels() - 1);
  std::vector<level_t> values(table_size(dom, arity));
  for (level_t& v : values)
    v = static_cast<level_t>(dist(rng));
  return truth_table(dom, arity, std::move(values));
}

} // namespace

TEST_CASE("domain validates the level count") {
  CHECK(domain(2).levels() == 2);
  CHECK(domain(7).reversal(0) == 6);
  CHECK_THROWS_AS(domain(1), error);
  CHECK_THROWS_AS(domain(0), error);
}

TEST_CASE("make_table validates shape and levels") {
  const domain two(2);
  const truth_table nand = make_table(two, 2, lv({1, 1, 1, 0}));
  CHECK(nand.values() == lv({1, 1, 1, 0}));

  CHECK_THROWS_WITH_AS(static_cast<void>(make_table(two, 2, lv({1, 0, 0}))),
                       doctest::Contains("LengthMismatch"), error);
  CHECK_THROWS_WITH_AS(static_cast<void>(make_table(domain(3), 1, lv({2, 1, 3}))),
                       doctest::Contains("LevelOutOfRange"), error);
  CHECK_THROWS_WITH_AS(static_cast<void>(make_table(two, 0, lv({0}))),
                       doctest::Contains("BadArity"), error);
}

TEST_CASE("evaluate looks up argument-major positions") {
  const domain two(2);
  const domain three(3);

  const truth_table nor2 = nor_table(two, 2);
  CHECK(nor2.evaluate(lv({0, 0})) == 1);

  CHECK(max_table(three, 2).evaluate(lv({1, 2})) == 2);

  // The Peirce arrow is the n=2 instance of the neg-after-max family.
  const truth_table peirce = make_table(two, 2, lv({1, 0, 0, 0}));
  CHECK(peirce.evaluate(lv({0, 1})) == 0);

  CHECK_THROWS_AS(static_cast<void>(nor2.evaluate(lv({0}))), error);
  CHECK_THROWS_AS(static_cast<void>(nor2.evaluate(lv({0, 2}))), error);
}

TEST_CASE("eval_term is structural recursion over the set") {
  const domain two(2);
  const operator_set nand_set(two, {{"nand", nand_table(two, 2)}});
  const term t = term::apply("nand", {term::var(0), term::var(0)});
  CHECK(eval_term(t, nand_set, lv({1})) == 0);

  const domain three(3);
  const operator_set any3(three, {{"neg", neg_table(three)}});
  CHECK(eval_term(term::var(0), any3, lv({2})) == 2);

  const operator_set negmax(two, {{"neg", neg_table(two)}, {"max", max_table(two, 2)}});
  const term nor = term::apply("neg", {term::apply("max", {term::var(0), term::var(1)})});
  CHECK(eval_term(nor, negmax, lv({0, 1})) == 0);

  CHECK_THROWS_WITH_AS(static_cast<void>(eval_term(term::apply("xor", {term::var(0)}), negmax,
                                                   lv({0}))),
                       doctest::Contains("UnknownOperator"), error);
  CHECK_THROWS_WITH_AS(static_cast<void>(eval_term(term::apply("neg", {term::var(0), term::var(1)}),
                                                   negmax, lv({0, 1}))),
                       doctest::Contains("ArityMismatch"), error);
  CHECK_THROWS_WITH_AS(static_cast<void>(eval_term(term::var(2), negmax, lv({0, 1}))),
                       doctest::Contains("IndexOutOfRange"), error);
}

TEST_CASE("compose is pointwise") {
  const domain two(2);
  const truth_table neg = neg_table(two);
  const truth_table max2 = max_table(two, 2);

  CHECK(compose(neg, {max2}, 2) == nor_table(two, 2));

  const truth_table p0 = projection(two, 2, 0);
  CHECK(compose(max2, {p0, p0}, 2) == p0);

  // De Morgan over the three-level chain, confirmed against a direct
  // pointwise computation of neg(min(a, b)) on all nine tuples.
  const domain three(3);
  const truth_table neg3 = neg_table(three);
  const truth_table composed = compose(max_table(three, 2),
                                       {compose(neg3, {projection(three, 2, 0)}, 2),
                                        compose(neg3, {projection(three, 2, 1)}, 2)},
                                       2);
  std::vector<level_t> expected;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      expected.push_back(static_cast<level_t>(2 - std::min(a, b)));
  CHECK(composed.values() == expected);

  CHECK_THROWS_AS(static_cast<void>(compose(neg, {max2, max2}, 2)), error);
  CHECK_THROWS_AS(static_cast<void>(compose(neg3, {max2}, 2)), error);
}

TEST_CASE("projection returns its argument") {
  const domain two(2);
  CHECK(projection(two, 2, 0).values() == lv({0, 0, 1, 1}));
  CHECK(projection(two, 2, 1).values() == lv({0, 1, 0, 1}));
  CHECK(projection(domain(3), 1, 0).values() == lv({0, 1, 2}));
  CHECK_THROWS_AS(static_cast<void>(projection(two, 2, 2)), error);
}

TEST_CASE("canonical tables") {
  CHECK(neg_table(domain(2)).values() == lv({1, 0}));
  CHECK(nor_table(domain(2), 2).values() == lv({1, 0, 0, 0}));
  CHECK(neg_table(domain(3)).values() == lv({2, 1, 0}));
  CHECK(canonical_tables(domain(3), 3).find("nor3") != nullptr);
  CHECK_THROWS_WITH_AS(static_cast<void>(max_table(domain(2), 1)),
                       doctest::Contains("BadArity"), error);
}

TEST_CASE("composition and evaluation commute on the full domain") {
  std::mt19937 rng(20240817);
  for (int m : {2, 3}) {
    const domain dom(m);
    for (int outer_arity : {1, 2, 3}) {
      for (int var_count : {1, 2, 3}) {
        const truth_table outer = random_table(rng, dom, outer_arity);
        std::vector<truth_table> inners;
        for (int j = 0; j < outer_arity; ++j)
          inners.push_back(random_table(rng, dom, var_count));
        const truth_table composed = compose(outer, inners, var_count);

        std::vector<level_t> args(static_cast<std::size_t>(var_count), 0);
        for (std::size_t p = 0; p < composed.values().size(); ++p) {
          std::vector<level_t> mid;
          for (const truth_table& g : inners)
            mid.push_back(g.evaluate(args));
          CHECK(composed.evaluate(args) == outer.evaluate(mid));
          next_tuple(dom, args);
        }
      }
    }
  }
}

TEST_CASE("eval_term is a homomorphism on random terms") {
  std::mt19937 rng(987654);
  const domain dom(3);
  const operator_set set(dom, {{"neg", neg_table(dom)},
                               {"max", max_table(dom, 2)},
                               {"min", min_table(dom, 2)}});
  std::uniform_int_distribution<int> pick_op(0, 2);
  std::uniform_int_distribution<int> pick_var(0, 1);

  // Random Apply nodes: check the defining clause at the root.
  for (int trial = 0; trial < 200; ++trial) {
    std::function<term(int)> gen = [&](int depth) -> term {
      if (depth == 0 || pick_op(rng) == 0)
        return term::var(pick_var(rng));
      const int which = pick_op(rng);
      if (which == 0)
        return term::apply("neg", {gen(depth - 1)});
      const std::string name = which == 1 ? "max" : "min";
      return term::apply(name, {gen(depth - 1), gen(depth - 1)});
    };
    term t = gen(3);
    if (t.is_var())
      t = term::apply("neg", {t});

    std::vector<level_t> args = {static_cast<level_t>(rng() % 3),
                                 static_cast<level_t>(rng() % 3)};
    std::vector<level_t> child_values;
    for (const term& c : t.args())
      child_values.push_back(eval_term(c, set, args));
    CHECK(eval_term(t, set, args) == set.find(t.op_name())->evaluate(child_values));
  }
}

TEST_CASE("neg is an involution for every small chain") {
  for (int m = 2; m <= 7; ++m) {
    const domain dom(m);
    CHECK(compose(neg_table(dom), {neg_table(dom)}, 1) == projection(dom, 1, 0));
  }
}

TEST_CASE("De Morgan on chains: neg of max is the min-fold of reversals") {
  for (int m : {2, 3}) {
    const domain dom(m);
    for (int n : {2, 3}) {
      const truth_table lhs = nor_table(dom, n);
      std::vector<level_t> args(static_cast<std::size_t>(n), 0);
      for (std::size_t p = 0; p < lhs.values().size(); ++p) {
        level_t acc = dom.reversal(args[0]);
        for (int j = 1; j < n; ++j)
          acc = std::min(acc, dom.reversal(args[static_cast<std::size_t>(j)]));
        CHECK(lhs.values()[p] == acc);
        next_tuple(dom, args);
      }
    }
  }
}

TEST_CASE("index and tuple round-trip") {
  for (int m = 2; m <= 4; ++m) {
    const domain dom(m);
    for (int n = 1; n <= 3; ++n) {
      const std::size_t size = table_size(dom, n);
      std::vector<level_t> args(static_cast<std::size_t>(n));
      for (std::size_t p = 0; p < size; ++p) {
        tuple_of_index(dom, p, args);
        CHECK(index_of_tuple(dom, args) == p);
      }
    }
  }
}

TEST_CASE("terms print in prefix notation and substitute by index") {
  const term t = term::apply("NAND", {term::var(0), term::var(1)});
  CHECK(t.to_string() == "NAND(x0,x1)");
  CHECK(t.depth() == 1);

  const term diag = substitute(t, {term::var(0), term::var(0)});
  CHECK(diag.to_string() == "NAND(x0,x0)");
  CHECK_THROWS_AS(static_cast<void>(substitute(t, {term::var(0)})), error);
}

TEST_CASE("operator_set rejects bad collections") {
  const domain two(2);
  const named_table nand{"nand", nand_table(two, 2)};
  CHECK_THROWS_AS(operator_set(two, {}), error);
  CHECK_THROWS_AS(operator_set(two, {nand, nand}), error);
  CHECK_THROWS_AS(operator_set(domain(3), {nand}), error);
}
