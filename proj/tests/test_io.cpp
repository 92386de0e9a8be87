#include <cstdio>
#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "polyslice/enumerator.hpp"
#include "polyslice/errors.hpp"
#include "polyslice/io.hpp"
#include "polyslice/slicer.hpp"

using namespace polyslice;

namespace {

RVector iv(std::initializer_list<long> xs) { return RVector::from_ints(std::vector<long>(xs)); }

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("polytopes survive a JSON round trip") {
    for (const VPolytope& p : {hypercube(3), cyclic(CyclicSpec::standard(4, 7)), icosahedron_rational(),
                               stack_all_facets(cube3())}) {
      const Json j = to_json(p);
      const VPolytope back = polytope_from_json(j);
      CHECK(back.name() == p.name());
      CHECK(back.vertices() == p.vertices());
      CHECK(back.edges() == p.edges());
      CHECK(back.facets() == p.facets());
      CHECK(dump(to_json(back)) == dump(j));
    }
  }

  TEST_CASE("rational coordinates are strings, integers are accepted") {
    const Json j = to_json(RVector{Rational(1, 2), Rational(-3)});
    CHECK(j == Json::array({"1/2", "-3"}));
    CHECK(vector_from_json(Json::array({1, "2/4", -5})) == RVector{Rational(1), Rational(1, 2), Rational(-5)});
    CHECK_THROWS_AS(vector_from_json(Json::array({1.5})), InputError);
    CHECK_THROWS_AS(vector_from_json(Json::array({"1/0"})), InputError);
    CHECK_THROWS_AS(vector_from_json(Json("1")), InputError);
  }

  TEST_CASE("schema violations") {
    Json j = to_json(hypercube(2));
    Json missing = j;
    missing.erase("dim");
    CHECK_THROWS_AS(polytope_from_json(missing), InputError);
    Json bad_edge = j;
    bad_edge["edges"].push_back(Json::array({0}));
    CHECK_THROWS_AS(polytope_from_json(bad_edge), InputError);
    Json out_of_range = j;
    out_of_range["edges"].push_back(Json::array({0, 9}));
    CHECK_THROWS_AS(polytope_from_json(out_of_range), InputError);
    CHECK_THROWS_AS(polytope_from_json(Json::array()), InputError);
  }

  TEST_CASE("content hash ignores the name and tracks the geometry") {
    const VPolytope q = hypercube(3);
    const std::string h = content_hash(q);
    CHECK(h.rfind("fnv1a64:", 0) == 0);
    CHECK(h.size() == 8 + 16);
    CHECK(content_hash(q.renamed("other")) == h);
    CHECK(content_hash(hypercube(3)) == h);
    CHECK(content_hash(cube3()) == h);  // same geometry under another name
    CHECK(content_hash(octahedron()) != h);
    CHECK(content_hash(hypercube(4)) != h);
  }

  TEST_CASE("reports survive a JSON round trip") {
    DirectionGenerator g;
    const VSSReport r = vss_by_sweep(octahedron(), g);
    const VSSReport back = report_from_json(to_json(r));
    CHECK(back == r);
    CHECK(dump(to_json(back)) == dump(to_json(r)));
    const VSSReport o = partition_oracle(tetrahedron()).report;
    CHECK(report_from_json(to_json(o)) == o);
  }

  TEST_CASE("report serialization is deterministic") {
    DirectionGenerator g;
    CHECK(dump(to_json(vss_by_sweep(hypercube(3), g))) == dump(to_json(vss_by_sweep(hypercube(3), g))));
  }

  TEST_CASE("CSV lists one witness per count") {
    VSSReport r;
    r.witnesses[3] = Witness{iv({1, 1, 1}), Rational(1)};
    r.witnesses[6] = Witness{RVector{Rational(1), Rational(-1, 2)}, Rational(3, 2)};
    CHECK(report_csv(r) == "count,direction,offset\n3,1 1 1,1\n6,1 -1/2,3/2\n");
  }

  TEST_CASE("direction parsing") {
    CHECK(parse_direction("1,-2,3/4") == RVector{Rational(1), Rational(-2), Rational(3, 4)});
    CHECK(parse_direction(" 1 , 2 ") == iv({1, 2}));
    CHECK_THROWS_AS(parse_direction(""), InputError);
    CHECK_THROWS_AS(parse_direction("1,,2"), InputError);
    CHECK_THROWS_AS(parse_direction("1,x"), InputError);
  }

  TEST_CASE("slice partitions and sweeps serialize their counts") {
    const Json part = to_json(classify(hypercube(3), {iv({1, 1, 1}), Rational(3, 2)}));
    CHECK(part["cv"] == 6);
    CHECK(part["crossed"].size() == 6);
    const Json sw = to_json(sweep(hypercube(3), iv({1, 1, 1})));
    CHECK(sw["at_level"] == Json::array({1, 3, 3, 1}));
    CHECK(sw["levels"] == Json::array({"0", "1", "2", "3"}));
  }

  TEST_CASE("files") {
    const auto path = std::filesystem::temp_directory_path() / "polyslice_io_test.json";
    write_text_file(path.string(), dump(to_json(hypercube(2))));
    CHECK(polytope_from_json(read_json_file(path.string())).num_vertices() == 4);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(read_json_file(path.string()), InputError);
    CHECK(dump(Json::object({{"a", 1}})) == "{\n  \"a\": 1\n}\n");
  }
}
