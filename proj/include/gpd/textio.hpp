#pragma once

#include "gpd/action.hpp"
#include "gpd/coset.hpp"
#include "gpd/groupoid.hpp"
#include "gpd/linrep.hpp"

#include <string>

namespace gpd {

/// Line-oriented text formats, UTF-8, with '#' starting a comment anywhere.
/// Serialization is canonical: parse(serialize(g)) round-trips and
/// serialize(parse(text)) is byte-identical for canonical files.
///
/// Groupoid:
///   objects: <n>
///   morphisms: <m>
///   dom: <m naturals>
///   cod: <m naturals>
///   id: <n naturals>
///   inv: <m naturals>
///   compose:
///   <g2> <g1> <result>        one line per composable pair
std::string serialize_groupoid(const FiniteGroupoid& g);
/// Throws Error with a line number on malformed input, duplicate keys,
/// entries out of range, duplicate or non-composable compose lines, and
/// missing composable pairs.
FiniteGroupoid parse_groupoid_text(const std::string& text, const std::string& origin = "<input>");
FiniteGroupoid load_groupoid(const std::string& path);

/// Subgroupoid subset file referencing a parent groupoid:
///   objects: <subset of object indices>
///   morphisms: <subset of morphism indices>
std::string serialize_subgroupoid(const Subgroupoid& s);
Subgroupoid parse_subgroupoid_text(const FiniteGroupoid& parent, const std::string& text,
                                   const std::string& origin = "<input>");
Subgroupoid load_subgroupoid(const FiniteGroupoid& parent, const std::string& path);

/// G-set:
///   gset over: <groupoid-file>
///   sizes: <n naturals>
///   act <g>: <image sequence>   one line per morphism
std::string serialize_gset(const GSet& x, const std::string& base_reference);
/// The caller resolves and loads the base groupoid first; the header
/// reference is returned by gset_base_reference.
GSet parse_gset_text(const FiniteGroupoid& base, const std::string& text,
                     const std::string& origin = "<input>");
std::string gset_base_reference(const std::string& text);

/// Representation:
///   rep over: <groupoid-file>
///   dims: <n naturals>
///   mat <g>:                    then dim[cod g] rows of dim[dom g] tokens
/// Scalar tokens are exact: "3", "-3/2", "1+1/2*i".
std::string serialize_representation(const Representation& r, const std::string& base_reference);
Representation parse_representation_text(const FiniteGroupoid& base, const std::string& text,
                                         const std::string& origin = "<input>");
std::string representation_base_reference(const std::string& text);

/// Invariant function: "fn: <m rational tokens>".
std::string serialize_function(const QVec& fn);
QVec parse_function_text(const std::string& text, std::size_t expected_length,
                         const std::string& origin = "<input>");

/// Natural transformation: per-object blocks "obj <x>:" followed by rows.
std::string serialize_nat_transform(const NatTransform& t);

/// Double cosets: one line "block <representative>: <sorted members>".
std::string serialize_double_cosets(const DoubleCosetPartition& p);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace gpd
