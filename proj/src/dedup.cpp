#include "rpys/dedup.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include <omp.h>

#include "rpys/disjoint_set.hpp"
#include "rpys/error.hpp"
#include "rpys/levenshtein.hpp"
#include "rpys/utf8.hpp"

namespace rpys {
namespace {

bool gate_ok(const std::optional<std::string>& a, const std::optional<std::string>& b) {
  return !a || !b || *a == *b;
}

bool gates_ok(const CitedRefVariant& a, const CitedRefVariant& b, const ClusterConfig& cfg) {
  if (cfg.require_volume && !gate_ok(a.volume, b.volume)) return false;
  if (cfg.require_page && !gate_ok(a.page, b.page)) return false;
  if (cfg.require_doi && !gate_ok(a.doi, b.doi)) return false;
  return true;
}

bool rpy_less(const std::optional<int>& a, const std::optional<int>& b) {
  if (!a || !b) return !a && b;
  return *a < *b;
}

// Index lists per rpy, each list in ascending index order.
std::vector<std::vector<std::uint32_t>> rpy_blocks(std::span<const CitedRefVariant> variants) {
  std::map<std::optional<int>, std::vector<std::uint32_t>, decltype(&rpy_less)> blocks(&rpy_less);
  for (std::uint32_t i = 0; i < variants.size(); ++i) blocks[variants[i].rpy].push_back(i);
  std::vector<std::vector<std::uint32_t>> out;
  out.reserve(blocks.size());
  for (auto& [rpy, idx] : blocks) out.push_back(std::move(idx));
  return out;
}

}  // namespace

void ClusterConfig::validate() const {
  if (threshold < Fraction(0) || threshold > Fraction(1)) {
    throw ConfigError("cluster threshold must lie in [0, 1], got " + threshold.to_string());
  }
}

std::string comparison_key(const CitedRefVariant& v) {
  std::string key;
  key.reserve(v.author.size() + v.source.size() + 1);
  bool pending_space = false;
  auto feed = [&](std::string_view text) {
    for (char c : text) {
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') {
        pending_space = !key.empty();
        continue;
      }
      if (pending_space) {
        key += ' ';
        pending_space = false;
      }
      key += (c >= 'a' && c <= 'z') ? static_cast<char>(c - 'a' + 'A') : c;
    }
  };
  feed(v.author);
  pending_space = !key.empty();
  feed(v.source);
  return key;
}

std::size_t max_edit_distance(std::size_t max_len, const Fraction& threshold) {
  const auto num = static_cast<unsigned __int128>(threshold.num());
  const auto den = static_cast<unsigned __int128>(threshold.den());
  return static_cast<std::size_t>(static_cast<unsigned __int128>(max_len) * (den - num) / den);
}

double similarity(const CitedRefVariant& a, const CitedRefVariant& b) {
  const std::u32string ka = utf8::decode(comparison_key(a));
  const std::u32string kb = utf8::decode(comparison_key(b));
  const std::size_t len = std::max(ka.size(), kb.size());
  if (len == 0) return 1.0;
  return 1.0 - static_cast<double>(levenshtein(ka, kb)) / static_cast<double>(len);
}

bool pair_matches(const CitedRefVariant& a, const CitedRefVariant& b, const ClusterConfig& cfg) {
  if (!gates_ok(a, b, cfg)) return false;
  const std::u32string ka = utf8::decode(comparison_key(a));
  const std::u32string kb = utf8::decode(comparison_key(b));
  const std::size_t limit = max_edit_distance(std::max(ka.size(), kb.size()), cfg.threshold);
  return levenshtein_bounded(ka, kb, limit) <= limit;
}

namespace kernels {

std::vector<Edge> match_edges_serial(std::span<const CitedRefVariant> variants, const ClusterConfig& cfg) {
  std::vector<Edge> edges;
  for (const auto& block : rpy_blocks(variants)) {
    for (std::size_t x = 0; x < block.size(); ++x) {
      for (std::size_t y = x + 1; y < block.size(); ++y) {
        if (pair_matches(variants[block[x]], variants[block[y]], cfg)) edges.emplace_back(block[x], block[y]);
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::vector<Edge> match_edges_parallel(std::span<const CitedRefVariant> variants, const ClusterConfig& cfg) {
  const auto n = static_cast<std::int64_t>(variants.size());
  std::vector<std::u32string> keys(variants.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) keys[i] = utf8::decode(comparison_key(variants[i]));

  // Flatten the blocks, each sorted by key length, into one work list.
  std::vector<std::uint32_t> order;
  std::vector<std::uint32_t> block_end;
  order.reserve(variants.size());
  block_end.reserve(variants.size());
  for (auto& block : rpy_blocks(variants)) {
    std::stable_sort(block.begin(), block.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return keys[a].size() < keys[b].size(); });
    const auto end = static_cast<std::uint32_t>(order.size() + block.size());
    for (std::uint32_t idx : block) {
      order.push_back(idx);
      block_end.push_back(end);
    }
  }

  std::vector<Edge> edges;
  const auto positions = static_cast<std::int64_t>(order.size());
#pragma omp parallel
  {
    std::vector<Edge> local;
#pragma omp for schedule(dynamic, 32) nowait
    for (std::int64_t p = 0; p < positions; ++p) {
      const std::uint32_t a = order[p];
      const std::size_t len_a = keys[a].size();
      for (std::uint32_t q = static_cast<std::uint32_t>(p) + 1; q < block_end[p]; ++q) {
        const std::uint32_t b = order[q];
        const std::size_t len_b = keys[b].size();
        const std::size_t limit = max_edit_distance(len_b, cfg.threshold);
        // Lengths only grow along the block, and so does len_b - len_a - limit.
        if (len_b - len_a > limit) break;
        if (!gates_ok(variants[a], variants[b], cfg)) continue;
        if (levenshtein_bounded(keys[a], keys[b], limit) <= limit) {
          local.emplace_back(std::min(a, b), std::max(a, b));
        }
      }
    }
#pragma omp critical
    edges.insert(edges.end(), local.begin(), local.end());
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace kernels

Partition cluster(std::vector<CitedRefVariant> variants, const ClusterConfig& cfg, Exec exec) {
  cfg.validate();
  std::sort(variants.begin(), variants.end(), [](const CitedRefVariant& a, const CitedRefVariant& b) {
    if (a.rpy != b.rpy) return rpy_less(a.rpy, b.rpy);
    if (a.raw != b.raw) return a.raw < b.raw;
    return a.total_count() < b.total_count();
  });

  const auto edges = exec == Exec::serial ? kernels::match_edges_serial(variants, cfg)
                                          : kernels::match_edges_parallel(variants, cfg);
  DisjointSet sets(variants.size());
  for (const auto& [a, b] : edges) sets.unite(a, b);

  // Clusters are emitted in order of their first (smallest) member index,
  // which is (rpy, raw) order because the input was sorted.
  Partition partition;
  std::vector<std::int64_t> slot(variants.size(), -1);
  for (std::uint32_t i = 0; i < variants.size(); ++i) {
    const std::uint32_t root = sets.find(i);
    if (slot[root] < 0) {
      slot[root] = static_cast<std::int64_t>(partition.size());
      partition.push_back(Cluster{variants[i].rpy, {}});
    }
    partition[static_cast<std::size_t>(slot[root])].members.push_back(std::move(variants[i]));
  }
  return partition;
}

std::vector<MergedCR> merge(const Partition& partition) {
  std::vector<MergedCR> out;
  out.reserve(partition.size());
  for (const Cluster& c : partition) {
    if (c.members.empty()) continue;
    const CitedRefVariant* best = &c.members.front();
    MergedCR m;
    m.rpy = c.rpy;
    m.member_count = c.members.size();
    for (const CitedRefVariant& v : c.members) {
      if (v.total_count() > best->total_count() ||
          (v.total_count() == best->total_count() && v.raw < best->raw)) {
        best = &v;
      }
      m.counts_by_year.merge_from(v.counts_by_year);
    }
    m.canonical_raw = best->raw;
    m.n_cr = m.counts_by_year.total();
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<CitedRefVariant> as_variants(std::span<const MergedCR> merged) {
  const ImportWindow any{INT32_MIN, INT32_MAX, true};
  std::vector<CitedRefVariant> out;
  out.reserve(merged.size());
  for (const MergedCR& m : merged) {
    CitedRefVariant v = *parse_cr(m.canonical_raw, any);
    v.counts_by_year = m.counts_by_year;
    out.push_back(std::move(v));
  }
  return out;
}

void write_cluster_dump(std::ostream& out, std::span<const MergedCR> merged) {
  for (const MergedCR& m : merged) {
    if (m.rpy) out << *m.rpy;
    out << '\t' << m.member_count << '\t' << m.canonical_raw << '\n';
  }
}

}  // namespace rpys
