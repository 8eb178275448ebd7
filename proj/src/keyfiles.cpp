#include "dnarabin/keyfiles.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace dnarabin {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string current;
    for (const char ch : text) {
        if (ch == '\n') {
            if (!current.empty() && current.back() == '\r') current.pop_back();
            lines.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(ch);
        }
    }
    if (!current.empty()) lines.push_back(std::move(current));
    return lines;
}

Bigint parse_decimal(const std::filesystem::path& path, const std::string& text, int line_no) {
    if (text.empty())
        fail(Errc::parse_error,
             path.string() + ": line " + std::to_string(line_no) + ": expected a decimal integer");
    for (const char ch : text) {
        if (ch < '0' || ch > '9')
            fail(Errc::parse_error, path.string() + ": line " + std::to_string(line_no) +
                                        ": '" + text + "' is not a decimal integer");
    }
    return Bigint(text);
}

void expect_line(const std::filesystem::path& path, const std::vector<std::string>& lines,
                 std::size_t index, const std::string& expected) {
    if (index >= lines.size() || lines[index] != expected)
        fail(Errc::parse_error, path.string() + ": expected \"" + expected + "\" on line " +
                                    std::to_string(index + 1));
}

}  // namespace

std::string read_binary_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Errc::io_error, "cannot open " + path.string() + " for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) fail(Errc::io_error, "read failed on " + path.string());
    return buffer.str();
}

void write_binary_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(Errc::io_error, "cannot open " + path.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) fail(Errc::io_error, "write failed on " + path.string());
}

void write_public_key_file(const std::filesystem::path& path, const RabinPublicKey& pk) {
    write_binary_file(path, "RABIN-PUB 1\n" + pk.n.str() + "\n");
}

RabinPublicKey read_public_key_file(const std::filesystem::path& path) {
    const auto lines = split_lines(read_binary_file(path));
    expect_line(path, lines, 0, "RABIN-PUB 1");
    if (lines.size() != 2)
        fail(Errc::parse_error, path.string() + ": expected exactly one modulus line");
    const Bigint n = parse_decimal(path, lines[1], 2);
    if (n < 15 || n % 2 == 0)
        fail(Errc::parse_error, path.string() + ": modulus must be odd and at least 15");
    return RabinPublicKey{n};
}

void write_private_key_file(const std::filesystem::path& path, const RabinPrivateKey& sk) {
    write_binary_file(path, "RABIN-PRIV 1\n" + sk.p.str() + "\n" + sk.q.str() + "\n");
}

RabinPrivateKey read_private_key_file(const std::filesystem::path& path) {
    const auto lines = split_lines(read_binary_file(path));
    expect_line(path, lines, 0, "RABIN-PRIV 1");
    if (lines.size() != 3)
        fail(Errc::parse_error, path.string() + ": expected exactly two prime lines");
    const Bigint p = parse_decimal(path, lines[1], 2);
    const Bigint q = parse_decimal(path, lines[2], 3);
    try {
        return keypair_from_primes(p, q).priv;
    } catch (const Error& e) {
        fail(Errc::parse_error, path.string() + ": " + e.what());
    }
}

void write_dna_key_file(const std::filesystem::path& path, const DnaSequence& key) {
    write_binary_file(path, format_dna_key(key));
}

DnaSequence read_dna_key_file(const std::filesystem::path& path) {
    try {
        return parse_dna_text(read_binary_file(path));
    } catch (const Error& e) {
        if (e.code() == Errc::io_error) throw;
        fail(e.code(), path.string() + ": " + e.what());
    }
}

void write_ciphertext_file(const std::filesystem::path& path, const CipherText& ct) {
    std::string out = "DNAOTP-CT 1 " + std::to_string(ct.block_width) + " " +
                      std::to_string(ct.blocks.size()) + "\n";
    for (const BitString& block : ct.blocks) {
        if (block.size() != ct.block_width)
            fail(Errc::invalid_argument, "ciphertext block of width " +
                                             std::to_string(block.size()) + " in a " +
                                             std::to_string(ct.block_width) + "-wide stream");
        out += block.to_string();
        out.push_back('\n');
    }
    write_binary_file(path, out);
}

CipherText read_ciphertext_file(const std::filesystem::path& path) {
    const auto lines = split_lines(read_binary_file(path));
    if (lines.empty()) fail(Errc::parse_error, path.string() + ": empty ciphertext file");

    std::istringstream header(lines[0]);
    std::string magic, version;
    std::size_t width = 0;
    std::size_t count = 0;
    if (!(header >> magic >> version >> width >> count) || !(header >> std::ws).eof() ||
        magic != "DNAOTP-CT" || version != "1")
        fail(Errc::parse_error,
             path.string() + ": expected header \"DNAOTP-CT 1 <block_width> <block_count>\"");
    if (width % 2 != 0 || width < 2)
        fail(Errc::parse_error, path.string() + ": block width must be even and positive");
    if (lines.size() != count + 1)
        fail(Errc::parse_error, path.string() + ": expected " + std::to_string(count) +
                                    " block lines, found " + std::to_string(lines.size() - 1));

    CipherText ct{width, {}};
    ct.blocks.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const std::string& line = lines[i + 1];
        if (line.size() != width)
            fail(Errc::parse_error, path.string() + ": line " + std::to_string(i + 2) + ": block has " +
                                        std::to_string(line.size()) + " digits, expected " +
                                        std::to_string(width));
        try {
            ct.blocks.push_back(BitString::from_string(line));
        } catch (const Error& e) {
            fail(Errc::parse_error,
                 path.string() + ": line " + std::to_string(i + 2) + ": " + e.what());
        }
    }
    return ct;
}

}  // namespace dnarabin
