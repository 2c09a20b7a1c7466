#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "descartes/quadruples.hpp"

namespace descartes {

enum class OutputFormat { Csv, JsonLines };

struct EnumerationJob {
  std::int64_t bound = 1;  // max |component|
  bool primitive_only = false;
  OutputFormat format = OutputFormat::Csv;
  std::int64_t shard_index = 0;
  std::int64_t shard_count = 1;
  bool include_zero = false;
  unsigned threads = 1;

  /// Throws std::invalid_argument on a bad bound or shard.
  void validate() const;
};

struct QuadrupleRecord {
  std::int64_t m1 = 0, n1 = 0, m2 = 0, n2 = 0;  // a = (m1, n1), b = (m2, n2)
  Rational A, B, C, D1, D2;
  CanonicalQuadruple canonical;  // of (A, B, C, D1)
  bool primitive = false;

  std::array<std::int64_t, 4> generator() const { return {m1, n1, m2, n2}; }
};

QuadrupleRecord make_record(std::int64_t m1, std::int64_t n1, std::int64_t m2, std::int64_t n2);

/// Records for this job's shard in lexicographic (m1, n1, m2, n2) order.
std::vector<QuadrupleRecord> enumerate(const EnumerationJob& job);

/// Number of pairs the unsharded job visits before the primitive filter.
std::int64_t expected_pair_count(const EnumerationJob& job);

/// Unique canonical primitive quadruples, ascending by (sum, entries).
std::vector<std::array<Rational, 4>> dedup_canonical(const std::vector<QuadrupleRecord>& records);

/// Concatenates shard outputs and restores generator order.
std::vector<QuadrupleRecord> merge_records(std::vector<std::vector<QuadrupleRecord>> shards);

std::string format_records(const std::vector<QuadrupleRecord>& records, OutputFormat format);
std::vector<QuadrupleRecord> parse_records(const std::string& text, OutputFormat format);

/// Writes via a temporary file and rename. Throws Error{IoError}.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);
std::string read_file(const std::filesystem::path& path);

}  // namespace descartes
