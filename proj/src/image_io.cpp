#include "texdesc/image_io.hpp"

#include <jpeglib.h>
#include <png.h>

#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <memory>
#include <vector>

namespace texdesc {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

FilePtr open_file(const std::string& path, const char* mode) {
    FilePtr f(std::fopen(path.c_str(), mode));
    if (!f) throw IoError("cannot open file: " + path);
    return f;
}

// Interleaved 8-bit buffer, 1 or 3 channels.
struct RawImage {
    int width = 0;
    int height = 0;
    int channels = 0;
    std::vector<unsigned char> data;
};

RawImage decode_png(std::FILE* fp, const std::string& path) {
    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw IoError("libpng init failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw IoError("libpng init failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw FormatError("corrupt PNG: " + path);
    }
    png_init_io(png, fp);
    png_read_info(png, info);

    const png_byte color_type = png_get_color_type(png, info);
    const png_byte bit_depth = png_get_bit_depth(png, info);

    // Normalize everything to 8-bit gray or RGB without alpha.
    if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) png_set_expand_gray_1_2_4_to_8(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
    if (bit_depth == 16) png_set_strip_16(png);
    if (color_type & PNG_COLOR_MASK_ALPHA) png_set_strip_alpha(png);
    png_read_update_info(png, info);

    RawImage raw;
    raw.width = static_cast<int>(png_get_image_width(png, info));
    raw.height = static_cast<int>(png_get_image_height(png, info));
    raw.channels = static_cast<int>(png_get_channels(png, info));
    if (raw.channels != 1 && raw.channels != 3) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw FormatError("unsupported PNG channel layout: " + path);
    }

    raw.data.resize(static_cast<std::size_t>(raw.width) * raw.height * raw.channels);
    std::vector<png_bytep> rows(raw.height);
    for (int y = 0; y < raw.height; ++y) {
        rows[y] = raw.data.data() + static_cast<std::size_t>(y) * raw.width * raw.channels;
    }
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);
    return raw;
}

struct JpegErrorMgr {
    jpeg_error_mgr pub;
    std::jmp_buf jump;
};

void jpeg_error_exit(j_common_ptr cinfo) {
    auto* err = reinterpret_cast<JpegErrorMgr*>(cinfo->err);
    std::longjmp(err->jump, 1);
}

RawImage decode_jpeg(std::FILE* fp, const std::string& path) {
    jpeg_decompress_struct cinfo;
    JpegErrorMgr jerr;
    cinfo.err = jpeg_std_error(&jerr.pub);
    jerr.pub.error_exit = jpeg_error_exit;
    if (setjmp(jerr.jump)) {
        jpeg_destroy_decompress(&cinfo);
        throw FormatError("corrupt JPEG: " + path);
    }
    jpeg_create_decompress(&cinfo);
    jpeg_stdio_src(&cinfo, fp);
    jpeg_read_header(&cinfo, TRUE);
    cinfo.out_color_space = cinfo.num_components == 1 ? JCS_GRAYSCALE : JCS_RGB;
    jpeg_start_decompress(&cinfo);

    RawImage raw;
    raw.width = static_cast<int>(cinfo.output_width);
    raw.height = static_cast<int>(cinfo.output_height);
    raw.channels = cinfo.output_components;
    if (raw.channels != 1 && raw.channels != 3) {
        jpeg_destroy_decompress(&cinfo);
        throw FormatError("unsupported JPEG channel layout: " + path);
    }
    raw.data.resize(static_cast<std::size_t>(raw.width) * raw.height * raw.channels);
    while (cinfo.output_scanline < cinfo.output_height) {
        unsigned char* row =
            raw.data.data() + static_cast<std::size_t>(cinfo.output_scanline) * raw.width * raw.channels;
        jpeg_read_scanlines(&cinfo, &row, 1);
    }
    jpeg_finish_decompress(&cinfo);
    jpeg_destroy_decompress(&cinfo);
    return raw;
}

RawImage decode_any(const std::string& path) {
    FilePtr fp = open_file(path, "rb");
    unsigned char magic[8] = {0};
    const std::size_t got = std::fread(magic, 1, sizeof(magic), fp.get());
    std::rewind(fp.get());
    static const unsigned char png_sig[8] = {0x89, 'P', 'N', 'G', 0x0d, 0x0a, 0x1a, 0x0a};
    if (got >= 8 && std::memcmp(magic, png_sig, 8) == 0) {
        return decode_png(fp.get(), path);
    }
    if (got >= 3 && magic[0] == 0xff && magic[1] == 0xd8 && magic[2] == 0xff) {
        return decode_jpeg(fp.get(), path);
    }
    throw FormatError("not a PNG or JPEG file: " + path);
}

ImagePlane raw_to_gray(const RawImage& raw) {
    std::vector<float> out(static_cast<std::size_t>(raw.width) * raw.height);
    if (raw.channels == 1) {
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = raw.data[i] / 255.0f;
    } else {
        for (std::size_t i = 0; i < out.size(); ++i) {
            const float r = raw.data[3 * i] / 255.0f;
            const float g = raw.data[3 * i + 1] / 255.0f;
            const float b = raw.data[3 * i + 2] / 255.0f;
            out[i] = std::min(1.0f, 0.299f * r + 0.587f * g + 0.114f * b);
        }
    }
    return ImagePlane(raw.width, raw.height, std::move(out));
}

ImageRgb raw_to_rgb(const RawImage& raw) {
    const std::size_t n = static_cast<std::size_t>(raw.width) * raw.height;
    std::vector<float> r(n), g(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (raw.channels == 1) {
            r[i] = g[i] = b[i] = raw.data[i] / 255.0f;
        } else {
            r[i] = raw.data[3 * i] / 255.0f;
            g[i] = raw.data[3 * i + 1] / 255.0f;
            b[i] = raw.data[3 * i + 2] / 255.0f;
        }
    }
    return ImageRgb(ImagePlane(raw.width, raw.height, std::move(r)),
                    ImagePlane(raw.width, raw.height, std::move(g)),
                    ImagePlane(raw.width, raw.height, std::move(b)));
}

unsigned char to_byte(float v) {
    const float s = v * 255.0f + 0.5f;
    return static_cast<unsigned char>(s < 0.0f ? 0.0f : (s > 255.0f ? 255.0f : s));
}

// temp file + rename so partially written images never appear under the final name
class AtomicFile {
public:
    explicit AtomicFile(const std::string& path)
        : final_path_(path), tmp_path_(path + ".tmp"), file_(open_file(tmp_path_, "wb")) {}
    ~AtomicFile() {
        if (file_) {
            file_.reset();
            std::remove(tmp_path_.c_str());
        }
    }
    std::FILE* get() { return file_.get(); }
    void commit() {
        std::fflush(file_.get());
        file_.reset();
        std::error_code ec;
        std::filesystem::rename(tmp_path_, final_path_, ec);
        if (ec) throw IoError("cannot rename " + tmp_path_ + " to " + final_path_);
    }

private:
    std::string final_path_;
    std::string tmp_path_;
    FilePtr file_;
};

void encode_png(const unsigned char* data, int width, int height, int channels,
                const std::string& path) {
    AtomicFile out(path);
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw IoError("libpng init failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw IoError("libpng init failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw IoError("PNG write failed: " + path);
    }
    png_init_io(png, out.get());
    png_set_IHDR(png, info, width, height, 8,
                 channels == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    std::vector<png_bytep> rows(height);
    for (int y = 0; y < height; ++y) {
        rows[y] = const_cast<png_bytep>(data + static_cast<std::size_t>(y) * width * channels);
    }
    png_write_image(png, rows.data());
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
    out.commit();
}

void encode_jpeg(const unsigned char* data, int width, int height, int channels, int quality,
                 const std::string& path) {
    AtomicFile out(path);
    jpeg_compress_struct cinfo;
    JpegErrorMgr jerr;
    cinfo.err = jpeg_std_error(&jerr.pub);
    jerr.pub.error_exit = jpeg_error_exit;
    if (setjmp(jerr.jump)) {
        jpeg_destroy_compress(&cinfo);
        throw IoError("JPEG write failed: " + path);
    }
    jpeg_create_compress(&cinfo);
    jpeg_stdio_dest(&cinfo, out.get());
    cinfo.image_width = static_cast<JDIMENSION>(width);
    cinfo.image_height = static_cast<JDIMENSION>(height);
    cinfo.input_components = channels;
    cinfo.in_color_space = channels == 1 ? JCS_GRAYSCALE : JCS_RGB;
    jpeg_set_defaults(&cinfo);
    jpeg_set_quality(&cinfo, quality, TRUE);
    jpeg_start_compress(&cinfo, TRUE);
    while (cinfo.next_scanline < cinfo.image_height) {
        JSAMPROW row = const_cast<JSAMPROW>(
            data + static_cast<std::size_t>(cinfo.next_scanline) * width * channels);
        jpeg_write_scanlines(&cinfo, &row, 1);
    }
    jpeg_finish_compress(&cinfo);
    jpeg_destroy_compress(&cinfo);
    out.commit();
}

std::vector<unsigned char> plane_bytes(const ImagePlane& image) {
    std::vector<unsigned char> data(static_cast<std::size_t>(image.width()) * image.height());
    for (std::size_t i = 0; i < data.size(); ++i) data[i] = to_byte(image.values()[i]);
    return data;
}

std::vector<unsigned char> rgb_bytes(const ImageRgb& image) {
    const std::size_t n = static_cast<std::size_t>(image.width()) * image.height();
    std::vector<unsigned char> data(n * 3);
    for (std::size_t i = 0; i < n; ++i) {
        data[3 * i] = to_byte(image.plane(0).values()[i]);
        data[3 * i + 1] = to_byte(image.plane(1).values()[i]);
        data[3 * i + 2] = to_byte(image.plane(2).values()[i]);
    }
    return data;
}

}  // namespace

LoadedImage load_image(const std::string& path, LoadMode mode) {
    const RawImage raw = decode_any(path);
    if (mode == LoadMode::Gray) return raw_to_gray(raw);
    return raw_to_rgb(raw);
}

ImagePlane load_image_gray(const std::string& path) {
    return std::get<ImagePlane>(load_image(path, LoadMode::Gray));
}

ImageRgb load_image_rgb(const std::string& path) {
    return std::get<ImageRgb>(load_image(path, LoadMode::Rgb));
}

void save_png(const ImagePlane& image, const std::string& path) {
    encode_png(plane_bytes(image).data(), image.width(), image.height(), 1, path);
}

void save_png(const ImageRgb& image, const std::string& path) {
    encode_png(rgb_bytes(image).data(), image.width(), image.height(), 3, path);
}

void save_jpeg(const ImagePlane& image, const std::string& path, int quality) {
    encode_jpeg(plane_bytes(image).data(), image.width(), image.height(), 1, quality, path);
}

void save_jpeg(const ImageRgb& image, const std::string& path, int quality) {
    encode_jpeg(rgb_bytes(image).data(), image.width(), image.height(), 3, quality, path);
}

}  // namespace texdesc
