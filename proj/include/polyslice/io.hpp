// JSON and CSV formats for polytopes and reports.
//
// Polytope: {"dim", "edges": [[i,j],...], "facets": [[i,...],...], "name",
//            "vertices": [["p/q",...],...]}
// Report:   the VSSReport fields, witnesses keyed by count as a decimal string.
// Keys are emitted in sorted order and sets as sorted arrays, so equal values
// always serialize to identical bytes.

#pragma once

#include <string>

#include "json.hpp"
#include "polyslice/enumerator.hpp"
#include "polyslice/polytope.hpp"
#include "polyslice/slicer.hpp"

namespace polyslice {

using Json = nlohmann::json;

Json to_json(const RVector& v);
RVector vector_from_json(const Json& j);

Json to_json(const VPolytope& p);
/// Throws InputError on schema violations.
VPolytope polytope_from_json(const Json& j);

Json to_json(const VSSReport& r);
VSSReport report_from_json(const Json& j);

Json to_json(const SweepProfile& s);
Json to_json(const SlicePartition& s);

/// "fnv1a64:" followed by 16 hex digits, over the canonical JSON of the
/// dimension, vertices and edges (the name does not contribute).
std::string content_hash(const VPolytope& p);

/// count,direction,offset with the direction as space-separated rationals.
std::string report_csv(const VSSReport& r);

/// Parses "c1,c2,..." into a vector of rationals.
RVector parse_direction(const std::string& text);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
/// Pretty-printed with two-space indentation and a trailing newline.
std::string dump(const Json& j);

}  // namespace polyslice
