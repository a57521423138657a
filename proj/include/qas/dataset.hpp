#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qas/rng.hpp"

namespace qas {

class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One preprocessed image: 256 pixels with unit L2 norm, binary label.
struct Sample {
    std::vector<double> pixels;
    int label = 0;
};

struct IdxImages {
    int count = 0;
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> pixels; // count * rows * cols, row-major
};

/// Parses an IDX image file (big-endian magic 2051). Distinct errors for
/// wrong magic and truncated payloads.
IdxImages parse_idx_images(std::span<const std::uint8_t> bytes);

/// Parses an IDX label file (magic 2049).
std::vector<std::uint8_t> parse_idx_labels(std::span<const std::uint8_t> bytes);

/// Reads a file, transparently gunzipping when it starts with the gzip magic.
std::vector<std::uint8_t> read_maybe_gzip(const std::filesystem::path& path);

/// 28x28 bytes -> /255 -> bilinear 16x16 -> row-major flatten -> unit L2.
/// All-zero images get a uniform floor before normalization.
std::vector<double> preprocess_image(std::span<const std::uint8_t> image28);

/// Train/validation/test splits plus an access counter on the test split so
/// a search run can prove it touched it exactly once.
class DataSplits {
public:
    DataSplits(std::vector<Sample> train, std::vector<Sample> valid, std::vector<Sample> test)
        : train_(std::move(train)), valid_(std::move(valid)), test_(std::move(test)) {}

    std::span<const Sample> train() const { return train_; }
    std::span<const Sample> valid() const { return valid_; }
    std::span<const Sample> test() const {
        ++test_access_count_;
        return test_;
    }
    int test_access_count() const { return test_access_count_; }

private:
    std::vector<Sample> train_;
    std::vector<Sample> valid_;
    std::vector<Sample> test_;
    mutable int test_access_count_ = 0;
};

struct CorpusManifest {
    int train_source_count = 0; // filtered 0/1 images in the official train set
    int test_count = 0;         // filtered 0/1 images in the official test set
    std::uint64_t seed = 0;
    std::uint32_t train_images_crc32 = 0;
    std::uint32_t train_labels_crc32 = 0;
    std::uint32_t test_images_crc32 = 0;
    std::uint32_t test_labels_crc32 = 0;
};

struct MnistCorpus {
    DataSplits splits;
    CorpusManifest manifest;
};

/// Loads the four standard MNIST IDX files from a directory (plain or .gz),
/// keeps digits 0/1, preprocesses, and carves the seeded validation split:
/// shuffle the 12665 filtered train images, first 10550 -> train, last 2115
/// -> validation. Filtered count mismatches raise DataError.
MnistCorpus load_mnist_splits(const std::filesystem::path& dir, std::uint64_t seed);

/// Label-balanced subset of each split (first k per class in split order).
/// A size of 0 keeps the full split.
DataSplits subsample_balanced(const DataSplits& splits, int train_size, int valid_size,
                              int test_size);

/// batch_size distinct samples drawn uniformly from the split.
std::vector<Sample> sample_batch(std::span<const Sample> split, int batch_size, Rng& rng);

} // namespace qas
