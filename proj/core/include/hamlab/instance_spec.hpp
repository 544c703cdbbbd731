#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include "hamlab/generators.hpp"
#include "hamlab/graph.hpp"

namespace hamlab {

// A self-contained, replayable description of one generated instance.  The
// canonical string form (family:key=value,...) is what tools print, what the
// sweep runner writes into result rows, and what parse_spec() accepts back;
// format -> parse -> format is the identity.

struct GnmParams {
    int n = 0;
    long m = 0;
    bool operator==(const GnmParams&) const = default;
};

struct GnmByKParams {
    int n = 0;
    double k = 0.0;  // mean-degree parameter, mapped via degree_param_to_m
    bool operator==(const GnmByKParams&) const = default;
};

struct GnStarParams {
    int n = 0;
    bool operator==(const GnStarParams&) const = default;
};

struct DegreeboundParams {
    int n = 0;
    double p3 = 0.0;  // fraction of degree-3 vertices
    int version = 1;  // stub-matching variant, 1 or 2
    bool operator==(const DegreeboundParams&) const = default;
};

struct KnightParams {
    int a = 0, b = 0;
    int rows = 0, cols = 0;
    bool operator==(const KnightParams&) const = default;
};

struct IccsParams {
    int k_sub = 0;
    int s = 0;
    bool operator==(const IccsParams&) const = default;
};

using InstanceParams = std::variant<GnmParams, GnmByKParams, GnStarParams,
                                    DegreeboundParams, KnightParams, IccsParams>;

struct InstanceSpec {
    InstanceParams params;
    std::uint64_t seed = 0;  // ignored by deterministic families (knight)
    bool operator==(const InstanceSpec&) const = default;
};

struct SpecError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Family tag as it appears before the ':' in the canonical form.
std::string family_name(const InstanceParams& params);

// Vertex count the parameters ask for, without generating anything.
int instance_order(const InstanceParams& params);

// Canonical forms (doubles printed shortest-round-trip):
//   gnm:n=100,m=250,seed=7
//   gnmk:n=100,k=1.1,seed=7
//   gnstar:n=100,seed=7
//   degreebound:n=100,p3=0.8,v=2,seed=7
//   knight:a=1,b=2,rows=8,cols=8        (deterministic; no seed key)
//   iccs:k=3,s=6,seed=7
std::string canonical_spec(const InstanceSpec& spec);

// Inverse of canonical_spec.  Keys may appear in any order but must match the
// family's key set exactly; malformed input raises SpecError.
InstanceSpec parse_spec(const std::string& text);

// Runs the family's generator with an engine seeded from spec.seed.  For the
// iccs family a layout pointer, when given, receives the construction map.
Graph build_instance(const InstanceSpec& spec, IccsLayout* layout = nullptr);

}  // namespace hamlab
