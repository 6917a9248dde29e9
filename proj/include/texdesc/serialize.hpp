#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

namespace texdesc {

// Little-endian primitive IO for the model and descriptor file formats.
// x86-64 only in practice; asserts at compile time via static_assert below.

class BinaryWriter {
public:
    explicit BinaryWriter(const std::string& path);
    ~BinaryWriter();

    void u32(std::uint32_t v);
    void u64(std::uint64_t v);
    void f32(float v);
    void f64(double v);
    void bytes(const void* data, std::size_t n);
    void str(const std::string& s);  // u64 length + raw bytes

    void f32_array(const float* data, std::size_t n);
    void f64_array(const double* data, std::size_t n);
    void matrix(const Eigen::MatrixXd& m);  // rows, cols, column-major f64
    void vector(const Eigen::VectorXd& v);

    /// Flushes and renames the temp file onto the target path.
    void commit();

private:
    std::string final_path_;
    std::string tmp_path_;
    std::ofstream out_;
    bool committed_ = false;
};

class BinaryReader {
public:
    explicit BinaryReader(const std::string& path);

    std::uint32_t u32();
    std::uint64_t u64();
    float f32();
    double f64();
    void bytes(void* data, std::size_t n);
    std::string str();

    void f32_array(float* data, std::size_t n);
    void f64_array(double* data, std::size_t n);
    Eigen::MatrixXd matrix();
    Eigen::VectorXd vector();

    bool at_eof();

private:
    std::string path_;
    std::ifstream in_;
};

// Shared container header for trained models. Each model type writes
//   magic "TXMODEL\0", format version, a type tag, the pipeline config hash,
// then its own payload (64-bit float matrices/vectors).
inline constexpr char kModelMagic[8] = {'T', 'X', 'M', 'O', 'D', 'E', 'L', '\0'};
inline constexpr std::uint32_t kModelVersion = 1;

enum class ModelType : std::uint32_t {
    Codebook = 1,
    Gmm = 2,
    Pca = 3,
    Svm = 4,
    AttributeBank = 5,
    EncodedVectors = 6,
};

void write_model_header(BinaryWriter& w, ModelType type, std::uint64_t config_hash);

/// Validates magic/version, returns (type, config_hash).
std::pair<ModelType, std::uint64_t> read_model_header(BinaryReader& r);

}  // namespace texdesc
