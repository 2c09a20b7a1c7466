#include "descartes/enumerator.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "descartes/error.hpp"

namespace descartes {

namespace {

constexpr const char* kCsvHeader = "m1,n1,m2,n2,A,B,C,D1,D2,canonical,primitive";

// Global lexicographic index -> (m1, n1, m2, n2) over [-bound, bound]^4.
std::array<std::int64_t, 4> decode(std::int64_t index, std::int64_t bound) {
  const std::int64_t side = 2 * bound + 1;
  std::array<std::int64_t, 4> g{};
  for (int k = 3; k >= 0; --k) {
    g[static_cast<std::size_t>(k)] = index % side - bound;
    index /= side;
  }
  return g;
}

std::vector<QuadrupleRecord> enumerate_range(const EnumerationJob& job, std::int64_t begin, std::int64_t end) {
  std::vector<QuadrupleRecord> out;
  for (std::int64_t i = begin; i < end; ++i) {
    const auto [m1, n1, m2, n2] = decode(i, job.bound);
    if (!job.include_zero && ((m1 == 0 && n1 == 0) || (m2 == 0 && n2 == 0))) continue;
    auto rec = make_record(m1, n1, m2, n2);
    if (job.primitive_only && !rec.primitive) continue;
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (char ch : line) {
    if (ch == '"') {
      quoted = !quoted;
    } else if (ch == ',' && !quoted) {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

std::int64_t to_i64(const std::string& s) {
  std::size_t used = 0;
  const long long v = std::stoll(s, &used);
  if (used != s.size()) throw Error(ErrorKind::ParseError, "bad integer '" + s + "'");
  return static_cast<std::int64_t>(v);
}

}  // namespace

void EnumerationJob::validate() const {
  if (bound < 1) throw std::invalid_argument("bound must be >= 1");
  if (shard_count < 1 || shard_index < 0 || shard_index >= shard_count) {
    throw std::invalid_argument("shard must satisfy 0 <= index < count");
  }
}

QuadrupleRecord make_record(std::int64_t m1, std::int64_t n1, std::int64_t m2, std::int64_t n2) {
  const auto family = from_spinor_pair({Rational(static_cast<long>(m1)), Rational(static_cast<long>(n1))},
                                       {Rational(static_cast<long>(m2)), Rational(static_cast<long>(n2))});
  QuadrupleRecord rec;
  rec.m1 = m1;
  rec.n1 = n1;
  rec.m2 = m2;
  rec.n2 = n2;
  rec.A = family.quadruple_1.A;
  rec.B = family.quadruple_1.B;
  rec.C = family.quadruple_1.C;
  rec.D1 = family.D1();
  rec.D2 = family.D2();
  rec.canonical = canonicalize(family.quadruple_1);
  rec.primitive = rec.canonical.is_primitive;
  return rec;
}

std::int64_t expected_pair_count(const EnumerationJob& job) {
  const std::int64_t side = 2 * job.bound + 1;
  const std::int64_t per_spinor = job.include_zero ? side * side : side * side - 1;
  return per_spinor * per_spinor;
}

std::vector<QuadrupleRecord> enumerate(const EnumerationJob& job) {
  job.validate();
  const std::int64_t side = 2 * job.bound + 1;
  const std::int64_t total = side * side * side * side;
  const std::int64_t begin = total * job.shard_index / job.shard_count;
  const std::int64_t end = total * (job.shard_index + 1) / job.shard_count;

  const std::int64_t workers = std::clamp<std::int64_t>(job.threads, 1, std::max<std::int64_t>(1, end - begin));
  std::vector<std::vector<QuadrupleRecord>> parts(static_cast<std::size_t>(workers));
  {
    std::vector<std::jthread> pool;
    for (std::int64_t w = 0; w < workers; ++w) {
      const std::int64_t lo = begin + (end - begin) * w / workers;
      const std::int64_t hi = begin + (end - begin) * (w + 1) / workers;
      pool.emplace_back([&, w, lo, hi] { parts[static_cast<std::size_t>(w)] = enumerate_range(job, lo, hi); });
    }
  }
  std::vector<QuadrupleRecord> out;
  for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(out));
  return out;
}

std::vector<std::array<Rational, 4>> dedup_canonical(const std::vector<QuadrupleRecord>& records) {
  auto less = [](const std::array<Rational, 4>& p, const std::array<Rational, 4>& q) {
    const Rational sp = p[0] + p[1] + p[2] + p[3];
    const Rational sq = q[0] + q[1] + q[2] + q[3];
    if (sp != sq) return sp < sq;
    return p < q;
  };
  std::set<std::array<Rational, 4>, decltype(less)> unique(less);
  for (const auto& r : records) unique.insert(r.canonical.primitive);
  return {unique.begin(), unique.end()};
}

std::vector<QuadrupleRecord> merge_records(std::vector<std::vector<QuadrupleRecord>> shards) {
  std::vector<QuadrupleRecord> out;
  for (auto& s : shards) std::move(s.begin(), s.end(), std::back_inserter(out));
  std::stable_sort(out.begin(), out.end(),
                   [](const QuadrupleRecord& p, const QuadrupleRecord& q) { return p.generator() < q.generator(); });
  return out;
}

std::string format_records(const std::vector<QuadrupleRecord>& records, OutputFormat format) {
  std::ostringstream os;
  if (format == OutputFormat::Csv) {
    os << kCsvHeader << '\n';
    for (const auto& r : records) {
      os << r.m1 << ',' << r.n1 << ',' << r.m2 << ',' << r.n2 << ',' << r.A << ',' << r.B << ',' << r.C << ','
         << r.D1 << ',' << r.D2 << ",\"" << r.canonical.key() << "\"," << (r.primitive ? "true" : "false") << '\n';
    }
    return os.str();
  }
  for (const auto& r : records) {
    nlohmann::json canonical = nlohmann::json::array();
    for (const auto& e : r.canonical.primitive) canonical.push_back(e.to_int64());
    const nlohmann::json line = {
        {"m1", r.m1}, {"n1", r.n1}, {"m2", r.m2}, {"n2", r.n2},
        {"A", r.A.to_int64()}, {"B", r.B.to_int64()}, {"C", r.C.to_int64()},
        {"D1", r.D1.to_int64()}, {"D2", r.D2.to_int64()},
        {"canonical", canonical}, {"primitive", r.primitive},
    };
    os << line.dump() << '\n';
  }
  return os.str();
}

std::vector<QuadrupleRecord> parse_records(const std::string& text, OutputFormat format) {
  std::vector<QuadrupleRecord> out;
  std::istringstream in(text);
  std::string line;
  bool header = format == OutputFormat::Csv;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (header) {
      if (line != kCsvHeader) throw Error(ErrorKind::ParseError, "unexpected CSV header '" + line + "'");
      header = false;
      continue;
    }
    if (format == OutputFormat::Csv) {
      const auto f = split_csv(line);
      if (f.size() != 11) throw Error(ErrorKind::ParseError, "expected 11 CSV fields: '" + line + "'");
      auto rec = make_record(to_i64(f[0]), to_i64(f[1]), to_i64(f[2]), to_i64(f[3]));
      if (f[4] != rec.A.to_string() || f[5] != rec.B.to_string() || f[6] != rec.C.to_string() ||
          f[7] != rec.D1.to_string() || f[8] != rec.D2.to_string()) {
        throw Error(ErrorKind::ParseError, "curvatures do not match the generator: '" + line + "'");
      }
      out.push_back(std::move(rec));
    } else {
      const auto j = nlohmann::json::parse(line);
      out.push_back(make_record(j.at("m1").get<std::int64_t>(), j.at("n1").get<std::int64_t>(),
                                j.at("m2").get<std::int64_t>(), j.at("n2").get<std::int64_t>()));
    }
  }
  return out;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorKind::IoError, "cannot open " + tmp.string());
    f << contents;
    if (!f.flush()) throw Error(ErrorKind::IoError, "write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorKind::IoError, "rename to " + path.string() + ": " + ec.message());
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::IoError, "cannot open " + path.string());
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

}  // namespace descartes
