#include "spikeclust/synth.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "spikeclust/alphabet.hpp"
#include "spikeclust/common.hpp"
#include "spikeclust/rng.hpp"

namespace spikeclust {

namespace {

// Residues used for simulation: the alphabet without the unknown marker 'X'.
std::string residue_pool() {
  std::string pool;
  for (char c : Alphabet::amino_acids().symbols()) {
    if (c != 'X') pool.push_back(c);
  }
  return pool;
}

char random_residue(std::mt19937_64& rng, const std::string& pool) {
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  return pool[pick(rng)];
}

char random_other_residue(std::mt19937_64& rng, const std::string& pool, char not_this) {
  for (;;) {
    const char c = random_residue(rng, pool);
    if (c != not_this) return c;
  }
}

std::string apply_mutations(const std::string& base,
                            const std::vector<std::pair<int, char>>& mutations) {
  std::string s = base;
  for (auto [pos, res] : mutations) {
    if (pos < 0 || static_cast<std::size_t>(pos) >= s.size()) {
      fail_arg(cat("mutation position ", pos, " outside sequence length ", s.size()));
    }
    s[static_cast<std::size_t>(pos)] = res;
  }
  return s;
}

}  // namespace

std::vector<VariantSpec> default_variant_specs(int per_variant, int base_length,
                                               double noise_rate, std::uint64_t seed) {
  const std::vector<std::pair<std::string, int>> plan = {
      {"Alpha", 8}, {"Beta", 9}, {"Delta", 8}, {"Gamma", 10}, {"Epsilon", 3}};
  int total = 0;
  for (const auto& [name, count] : plan) total += count;
  if (base_length < total) fail_arg(cat("base length ", base_length, " too short"));

  // Distinct positions across all variants so no two variants collide.
  auto rng = make_rng(seed, {0x5ec5});
  std::vector<int> positions(static_cast<std::size_t>(base_length));
  std::iota(positions.begin(), positions.end(), 0);
  for (int i = 0; i < total; ++i) {
    std::uniform_int_distribution<int> pick(i, base_length - 1);
    std::swap(positions[static_cast<std::size_t>(i)],
              positions[static_cast<std::size_t>(pick(rng))]);
  }

  std::vector<VariantSpec> specs;
  int cursor = 0;
  for (const auto& [name, count] : plan) {
    VariantSpec v;
    v.name = name;
    v.n_sequences = per_variant;
    v.noise_rate = noise_rate;
    for (int i = 0; i < count; ++i) {
      v.mutations.emplace_back(positions[static_cast<std::size_t>(cursor++)], '\0');
    }
    std::sort(v.mutations.begin(), v.mutations.end());
    specs.push_back(std::move(v));
  }
  // Residues are resolved in generate() against the base; mark them here with
  // a placeholder the generator replaces deterministically.
  return specs;
}

SynthDataset generate(int base_length, const std::vector<VariantSpec>& specs,
                      std::uint64_t seed) {
  if (specs.empty()) fail_arg("no variant specs given");
  {
    std::unordered_set<std::string> names;
    for (const auto& s : specs) {
      if (!names.insert(s.name).second) fail_arg(cat("duplicate variant name '", s.name, "'"));
      if (s.noise_rate < 0 || s.noise_rate >= 1) {
        fail_arg(cat("variant '", s.name, "': noise_rate must be in [0, 1)"));
      }
    }
  }

  const std::string pool = residue_pool();
  SynthDataset out;

  auto base_rng = make_rng(seed, {0xba5e});
  out.base.resize(static_cast<std::size_t>(base_length));
  for (auto& c : out.base) c = random_residue(base_rng, pool);

  // Resolve placeholder mutations ('\0') to a residue different from base.
  std::vector<VariantSpec> resolved = specs;
  for (std::size_t vi = 0; vi < resolved.size(); ++vi) {
    auto mut_rng = make_rng(seed, {0x307a, vi});
    for (auto& [pos, res] : resolved[vi].mutations) {
      if (pos < 0 || pos >= base_length) {
        fail_arg(cat("variant '", resolved[vi].name, "': mutation position ", pos,
                     " outside base length ", base_length));
      }
      if (res == '\0') {
        res = random_other_residue(mut_rng, pool, out.base[static_cast<std::size_t>(pos)]);
      }
    }
  }

  for (const auto& v : resolved) {
    out.consensus.emplace_back(v.name, apply_mutations(out.base, v.mutations));
  }
  for (std::size_t a = 0; a < out.consensus.size(); ++a) {
    for (std::size_t b = a + 1; b < out.consensus.size(); ++b) {
      if (out.consensus[a].second == out.consensus[b].second) {
        fail_arg(cat("variants '", out.consensus[a].first, "' and '",
                     out.consensus[b].first, "' have identical consensus sequences"));
      }
    }
  }

  for (std::size_t vi = 0; vi < resolved.size(); ++vi) {
    const auto& v = resolved[vi];
    const std::string& consensus = out.consensus[vi].second;
    for (int si = 0; si < v.n_sequences; ++si) {
      auto rng = make_rng(seed, {0x5e9, vi, static_cast<std::uint64_t>(si)});
      std::string s = consensus;
      if (v.noise_rate > 0) {
        std::bernoulli_distribution mutate(v.noise_rate);
        for (auto& c : s) {
          if (mutate(rng)) c = random_other_residue(rng, pool, c);
        }
      }
      std::string id = cat(v.name, "_", si);
      out.truth.emplace(id, v.name);
      out.records.push_back(SequenceRecord{std::move(id), std::move(s), v.name});
    }
  }
  return out;
}

}  // namespace spikeclust
