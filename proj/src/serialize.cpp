#include "texdesc/serialize.hpp"

#include <bit>
#include <cstring>
#include <filesystem>

#include "texdesc/image_io.hpp"

static_assert(std::endian::native == std::endian::little,
              "file formats are little-endian; big-endian hosts are unsupported");

namespace texdesc {

BinaryWriter::BinaryWriter(const std::string& path)
    : final_path_(path), tmp_path_(path + ".tmp"), out_(tmp_path_, std::ios::binary) {
    if (!out_) throw IoError("cannot open for writing: " + path);
}

BinaryWriter::~BinaryWriter() {
    if (!committed_) {
        out_.close();
        std::error_code ec;
        std::filesystem::remove(tmp_path_, ec);
    }
}

void BinaryWriter::u32(std::uint32_t v) { bytes(&v, sizeof(v)); }
void BinaryWriter::u64(std::uint64_t v) { bytes(&v, sizeof(v)); }
void BinaryWriter::f32(float v) { bytes(&v, sizeof(v)); }
void BinaryWriter::f64(double v) { bytes(&v, sizeof(v)); }

void BinaryWriter::bytes(const void* data, std::size_t n) {
    out_.write(static_cast<const char*>(data), static_cast<std::streamsize>(n));
    if (!out_) throw IoError("write failed: " + final_path_);
}

void BinaryWriter::str(const std::string& s) {
    u64(s.size());
    bytes(s.data(), s.size());
}

void BinaryWriter::f32_array(const float* data, std::size_t n) { bytes(data, n * sizeof(float)); }
void BinaryWriter::f64_array(const double* data, std::size_t n) { bytes(data, n * sizeof(double)); }

void BinaryWriter::matrix(const Eigen::MatrixXd& m) {
    u64(static_cast<std::uint64_t>(m.rows()));
    u64(static_cast<std::uint64_t>(m.cols()));
    f64_array(m.data(), static_cast<std::size_t>(m.size()));
}

void BinaryWriter::vector(const Eigen::VectorXd& v) {
    u64(static_cast<std::uint64_t>(v.size()));
    f64_array(v.data(), static_cast<std::size_t>(v.size()));
}

void BinaryWriter::commit() {
    out_.flush();
    if (!out_) throw IoError("write failed: " + final_path_);
    out_.close();
    std::error_code ec;
    std::filesystem::rename(tmp_path_, final_path_, ec);
    if (ec) throw IoError("cannot rename " + tmp_path_ + " to " + final_path_);
    committed_ = true;
}

BinaryReader::BinaryReader(const std::string& path) : path_(path), in_(path, std::ios::binary) {
    if (!in_) throw IoError("cannot open for reading: " + path);
}

std::uint32_t BinaryReader::u32() {
    std::uint32_t v;
    bytes(&v, sizeof(v));
    return v;
}

std::uint64_t BinaryReader::u64() {
    std::uint64_t v;
    bytes(&v, sizeof(v));
    return v;
}

float BinaryReader::f32() {
    float v;
    bytes(&v, sizeof(v));
    return v;
}

double BinaryReader::f64() {
    double v;
    bytes(&v, sizeof(v));
    return v;
}

void BinaryReader::bytes(void* data, std::size_t n) {
    in_.read(static_cast<char*>(data), static_cast<std::streamsize>(n));
    if (in_.gcount() != static_cast<std::streamsize>(n)) {
        throw FormatError("truncated file: " + path_);
    }
}

std::string BinaryReader::str() {
    const std::uint64_t n = u64();
    if (n > (1ULL << 32)) throw FormatError("corrupt string length in " + path_);
    std::string s(n, '\0');
    bytes(s.data(), n);
    return s;
}

void BinaryReader::f32_array(float* data, std::size_t n) { bytes(data, n * sizeof(float)); }
void BinaryReader::f64_array(double* data, std::size_t n) { bytes(data, n * sizeof(double)); }

Eigen::MatrixXd BinaryReader::matrix() {
    const std::uint64_t rows = u64();
    const std::uint64_t cols = u64();
    if (rows > (1ULL << 32) || cols > (1ULL << 32)) {
        throw FormatError("corrupt matrix dims in " + path_);
    }
    Eigen::MatrixXd m(rows, cols);
    f64_array(m.data(), static_cast<std::size_t>(m.size()));
    return m;
}

Eigen::VectorXd BinaryReader::vector() {
    const std::uint64_t n = u64();
    if (n > (1ULL << 32)) throw FormatError("corrupt vector length in " + path_);
    Eigen::VectorXd v(n);
    f64_array(v.data(), static_cast<std::size_t>(v.size()));
    return v;
}

bool BinaryReader::at_eof() {
    return in_.peek() == std::char_traits<char>::eof();
}

void write_model_header(BinaryWriter& w, ModelType type, std::uint64_t config_hash) {
    w.bytes(kModelMagic, sizeof(kModelMagic));
    w.u32(kModelVersion);
    w.u32(static_cast<std::uint32_t>(type));
    w.u64(config_hash);
}

std::pair<ModelType, std::uint64_t> read_model_header(BinaryReader& r) {
    char magic[8];
    r.bytes(magic, sizeof(magic));
    if (std::memcmp(magic, kModelMagic, sizeof(magic)) != 0) {
        throw FormatError("not a model file (bad magic)");
    }
    const std::uint32_t version = r.u32();
    if (version != kModelVersion) {
        throw FormatError("unsupported model version " + std::to_string(version));
    }
    const auto type = static_cast<ModelType>(r.u32());
    const std::uint64_t hash = r.u64();
    return {type, hash};
}

}  // namespace texdesc
