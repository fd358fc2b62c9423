#pragma once

#include "ipset/distance_matrix.hpp"
#include "ipset/embedding.hpp"
#include "ipset/search.hpp"

#include <filesystem>
#include <istream>
#include <optional>
#include <set>
#include <string>

namespace ipset {

/// Matrix text: n, then n rows of n decimal integers, whitespace separated.
/// Throws ParseError on malformed text or a matrix that is not a valid
/// distance matrix (asymmetric, nonzero diagonal, nonpositive entry).
DistanceMatrix parse_matrix(std::istream& in);
DistanceMatrix parse_matrix_text(const std::string& text);
DistanceMatrix read_matrix_file(const std::filesystem::path& path);
std::string format_matrix(const DistanceMatrix& m);

/// Coordinates one per line, "(x, y*sqrt(k))" with x and y as p/q.
std::string format_embedding_text(const EmbeddedPointSet& e);

/// {"radicand": k, "points": [{"x": "p/q", "y": {"coeff": "r/s", "radicand": k}}, ...]}
std::string format_embedding_json(const EmbeddedPointSet& e);
EmbeddedPointSet parse_embedding_json(const std::string& text);

/// One-line record: n, diameter, characteristic, matrix, exact coordinates
/// (omitted when the matrix has no embedding).
std::string format_record(const DistanceMatrix& m, const std::optional<Integer>& characteristic,
                          const std::optional<EmbeddedPointSet>& embedding);
std::string format_record(const FoundSet& f);
/// Matrix of a record line.
DistanceMatrix parse_record(const std::string& line);

/// "d k" per line; blank lines ignored.
std::set<OuterKey> read_checkpoint(const std::filesystem::path& path);
std::string format_checkpoint_line(const OuterKey& key);

} // namespace ipset
