#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "gmix/chain.hpp"
#include "gmix/dataset.hpp"
#include "gmix/diagnostics.hpp"

namespace gmix {

// Shortest round-trip decimal representation of a double.
std::string format_double(double v);

// One decimal number per line; '#' comment lines and blank lines ignored.
Dataset load_dataset(const std::filesystem::path& path);

// CSV layout: header state,mu_1..mu_K,sigma2_1..sigma2_K,w_1..w_K,n_1..n_K,empty
void save_samples(const PosteriorSamples& samples,
                  const std::filesystem::path& path);
PosteriorSamples load_samples(const std::filesystem::path& path);

// One saved allocation per line, labels separated by spaces (1-based in the
// file, matching the component columns of the samples CSV).
void save_allocations(const PosteriorSamples& samples,
                      const std::filesystem::path& path);
std::vector<std::vector<int>> load_allocations(
    const std::filesystem::path& path);

// CSV layout: header bin_left,bin_right,count,density
void save_histogram(const HistogramSummary& hist,
                    const std::filesystem::path& path);

// FNV-1a 64-bit digest of a file's bytes, as a hex string.
std::string file_digest(const std::filesystem::path& path);

}  // namespace gmix
