#include <numeric>
#include <set>
#include <sstream>

#include <catch_amalgamated.hpp>

#include "test_support.hpp"
#include "zagreb/canonical.hpp"
#include "zagreb/oracle.hpp"
#include "zagreb/report.hpp"

using namespace zagreb;

TEST_CASE("classify partitions the trees", "[oracle]") {
  const auto n4 = classify(4);
  REQUIRE(n4.size() == 2);
  REQUIRE(n4.at(2).size() == 1);
  CHECK(canonical_form(n4.at(2).front()) == canonical_form(Tree::path(4)));
  REQUIRE(n4.at(1).size() == 1);
  CHECK(degree_sequence_of(n4.at(1).front()) == degree_sequence_of(Tree::star(4)));

  const auto n8 = classify(8);
  std::set<int> keys;
  std::size_t total = 0;
  for (const auto& [k, trees] : n8) {
    keys.insert(k);
    total += trees.size();
    for (const auto& t : trees) CHECK(max_degree_count(t).count == k);
  }
  CHECK(keys == std::set<int>{1, 2, 3, 6});
  CHECK(total == 23);

  for (int n = 3; n <= 14; ++n) {
    std::set<int> found;
    for (const auto& [k, trees] : classify(n)) found.insert(k);
    const auto expected = admissible_ks(n);
    CHECK(found == std::set<int>(expected.begin(), expected.end()));
  }
}

TEST_CASE("verify_class examples", "[oracle]") {
  const auto forced = verify_class(10, 3);
  CHECK(forced.all_match());
  const DegreeSequence only({3, 3, 3, 2, 2, 1, 1, 1, 1, 1});
  for (Goal goal : {Goal::min, Goal::max}) {
    const auto& q = forced.quadrant(Index::pi1, goal);
    CHECK(q.oracle_value.exact == 11664);
    CHECK(q.oracle_sequences == std::vector<DegreeSequence>{only});
  }

  const auto r = verify_class(11, 2);
  const auto& q = r.quadrant(Index::pi1, Goal::min);
  CHECK(q.oracle_value.exact == 2500);
  CHECK(q.oracle_sequences ==
        std::vector<DegreeSequence>{DegreeSequence({5, 5, 2, 1, 1, 1, 1, 1, 1, 1, 1})});
  CHECK(r.quadrant(Index::pi1, Goal::max).oracle_value.exact == 82944);
  CHECK(r.quadrant(Index::pi2, Goal::min).oracle_value.exact == 746496);
  CHECK(r.quadrant(Index::pi2, Goal::max).oracle_value.exact == 39062500);
  CHECK(r.all_match());

  for (int n = 4; n <= 10; ++n) {
    const auto path = verify_class(n, n - 2);
    CHECK(path.class_size == 1);
    for (const auto& quad : path.quadrants) {
      CHECK(quad.oracle_value.exact == testing::big_pow(4, n - 2));
      CHECK(quad.match);
    }
  }

  CHECK_THROWS_AS(verify_class(8, 4), DomainError);
}

TEST_CASE("verify_grid", "[oracle]") {
  const auto small = verify_grid(4);
  REQUIRE(small.size() == 2);
  CHECK((small[0].n == 4 && small[0].k == 1));
  CHECK((small[1].n == 4 && small[1].k == 2));

  const auto serial = verify_grid(12, 1);
  const auto parallel = verify_grid(12, 4);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].all_match());
    CHECK(to_json(serial[i]) == to_json(parallel[i]));
    if (i > 0) {
      CHECK(std::pair(serial[i - 1].n, serial[i - 1].k) < std::pair(serial[i].n, serial[i].k));
    }
  }
  CHECK(verify_grid(3).empty());
  CHECK_THROWS_AS(verify_grid(kMaxEnumerationOrder + 1), DomainError);
}

TEST_CASE("report serialization", "[oracle][report]") {
  const auto reports = verify_grid(5);
  const auto doc = to_json(reports);
  CHECK(doc["pass"] == true);
  CHECK(doc["classes"] == 4);
  const auto& first = doc["reports"][0];
  std::vector<std::string> keys;
  for (auto it = first.begin(); it != first.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"n", "k", "class_size", "pi2_identity_mismatches",
                                         "match", "quadrants"});
  CHECK(first["quadrants"][0]["oracle_value"]["exact"].is_string());

  std::ostringstream csv;
  write_csv(csv, reports);
  const std::string text = csv.str();
  CHECK(text.starts_with("n,k,index,goal,oracle,formula,match\n"));
  CHECK(text.find("4,1,pi2,max,27,27,true\n") != std::string::npos);
  CHECK(std::count(text.begin(), text.end(), '\n') == 1 + 4 * 4);
}
