#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "hamlab/instance_spec.hpp"
#include "hamlab/solver.hpp"

using namespace hamlab;

TEST_CASE("canonical spec strings are pinned") {
    CHECK(canonical_spec({GnmParams{100, 250}, 7}) == "gnm:n=100,m=250,seed=7");
    CHECK(canonical_spec({GnmByKParams{100, 1.1}, 7}) == "gnmk:n=100,k=1.1,seed=7");
    CHECK(canonical_spec({GnStarParams{100}, 7}) == "gnstar:n=100,seed=7");
    CHECK(canonical_spec({DegreeboundParams{100, 0.8, 2}, 7}) ==
          "degreebound:n=100,p3=0.8,v=2,seed=7");
    CHECK(canonical_spec({KnightParams{1, 2, 8, 8}, 0}) == "knight:a=1,b=2,rows=8,cols=8");
    CHECK(canonical_spec({IccsParams{3, 6}, 7}) == "iccs:k=3,s=6,seed=7");
}

TEST_CASE("family names and instance orders") {
    CHECK(family_name(GnmParams{10, 5}) == "gnm");
    CHECK(family_name(GnmByKParams{10, 1.0}) == "gnmk");
    CHECK(family_name(GnStarParams{10}) == "gnstar");
    CHECK(family_name(DegreeboundParams{10, 0.5, 1}) == "degreebound");
    CHECK(family_name(KnightParams{1, 2, 8, 8}) == "knight");
    CHECK(family_name(IccsParams{2, 6}) == "iccs");

    CHECK(instance_order(GnmParams{10, 5}) == 10);
    CHECK(instance_order(GnmByKParams{200, 1.0}) == 200);
    CHECK(instance_order(GnStarParams{33}) == 33);
    CHECK(instance_order(DegreeboundParams{41, 0.5, 1}) == 41);
    CHECK(instance_order(KnightParams{1, 2, 5, 8}) == 40);
    CHECK(instance_order(IccsParams{3, 6}) == 42);
}

TEST_CASE("spec strings round-trip") {
    const std::vector<std::string> pinned{
        "gnm:n=100,m=250,seed=7",
        "gnmk:n=100,k=1.1,seed=7",
        "gnmk:n=1000,k=2.25,seed=31337",
        "gnstar:n=100,seed=7",
        "degreebound:n=100,p3=0.8,v=2,seed=7",
        "degreebound:n=400,p3=0.62,v=1,seed=9",
        "knight:a=1,b=2,rows=8,cols=8",
        "iccs:k=3,s=6,seed=7",
    };
    for (const std::string& s : pinned) CHECK(canonical_spec(parse_spec(s)) == s);

    const std::vector<InstanceSpec> specs{
        {GnmParams{40, 80}, 12345678901ull},
        {GnmByKParams{100, 1.05}, 3},
        {GnStarParams{64}, 0},
        {DegreeboundParams{1000, 0.9, 2}, 17},
        {KnightParams{0, 2, 3, 9}, 0},
        {IccsParams{4, 7}, 5},
    };
    for (const InstanceSpec& spec : specs) CHECK(parse_spec(canonical_spec(spec)) == spec);
}

TEST_CASE("parsing accepts any key order") {
    const InstanceSpec want{GnmParams{100, 250}, 7};
    CHECK(parse_spec("gnm:m=250,seed=7,n=100") == want);
    CHECK(parse_spec("gnm:seed=7,n=100,m=250") == want);
    CHECK(parse_spec("knight:cols=8,a=1,rows=8,b=2") ==
          InstanceSpec{KnightParams{1, 2, 8, 8}, 0});
    CHECK(parse_spec("degreebound:v=2,n=100,seed=7,p3=0.8") ==
          InstanceSpec{DegreeboundParams{100, 0.8, 2}, 7});
}

TEST_CASE("malformed specs raise SpecError") {
    const std::vector<std::string> bad{
        "",
        "gnm",
        "mystery:n=4,seed=1",
        "gnm:n=100,seed=7",                     // missing m
        "gnm:n=100,m=250,seed=7,extra=1",       // unknown key
        "gnm:n=100,m=250,m=251,seed=7",         // duplicate key
        "gnm:n=abc,m=250,seed=7",               // not a number
        "gnm:n=4.5,m=250,seed=7",               // not an integer
        "gnm:n=100,m=,seed=7",                  // empty value
        "gnm:n=100,250,seed=7",                 // no '='
        "gnm:=100,m=250,seed=7",                // empty key
        "gnmk:n=100,k=fast,seed=7",
        "knight:a=1,b=2,rows=8,cols=8,seed=7",  // knight takes no seed
        "iccs:k=3,s=6",                         // missing seed
    };
    for (const std::string& s : bad) {
        CHECK_THROWS_AS(parse_spec(s), SpecError);
    }
}

TEST_CASE("build_instance is deterministic and respects the order") {
    const std::vector<std::string> specs{
        "gnm:n=60,m=150,seed=11",  "gnmk:n=80,k=1.2,seed=11", "gnstar:n=50,seed=11",
        "degreebound:n=70,p3=0.4,v=1,seed=11", "degreebound:n=70,p3=0.4,v=2,seed=11",
        "knight:a=1,b=2,rows=6,cols=6", "iccs:k=2,s=7,seed=11",
    };
    for (const std::string& s : specs) {
        const InstanceSpec spec = parse_spec(s);
        const Graph a = build_instance(spec);
        const Graph b = build_instance(spec);
        CHECK(a == b);
        CHECK(a.order() == instance_order(spec.params));
        CHECK(a.check_consistent());
    }
    // Different seeds give different graphs.
    CHECK(build_instance(parse_spec("gnm:n=60,m=150,seed=1")) !=
          build_instance(parse_spec("gnm:n=60,m=150,seed=2")));
}

TEST_CASE("build_instance routes gnmk through the degree parameter") {
    const Graph g = build_instance(parse_spec("gnmk:n=100,k=1.0,seed=5"));
    CHECK(g.edge_count() == 307);
    CHECK_THROWS_AS(build_instance(parse_spec("gnmk:n=100,k=0,seed=5")),
                    std::invalid_argument);
}

TEST_CASE("build_instance exposes the iccs layout") {
    IccsLayout layout;
    const Graph g = build_instance(parse_spec("iccs:k=3,s=6,seed=21"), &layout);
    CHECK(layout.k_sub == 3);
    CHECK(layout.s == 6);
    REQUIRE(static_cast<int>(layout.intended_cycle.size()) == g.order());
    CHECK(verify_cycle(g, layout.intended_cycle));
}
