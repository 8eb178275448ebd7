#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <string>

#include "dnarabin/keyfiles.hpp"

using namespace dnarabin;
namespace fs = std::filesystem;

namespace {

struct ScratchDir {
    fs::path dir;
    ScratchDir() : dir(fs::temp_directory_path() / ("dnarabin-keyfiles-" +
                                                    std::to_string(::getpid()))) {
        fs::create_directories(dir);
    }
    ~ScratchDir() { fs::remove_all(dir); }
    fs::path operator/(const std::string& name) const { return dir / name; }
};

Errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    throw std::logic_error("expected an Error");
}

}  // namespace

TEST_CASE("public key files are exact and roundtrip") {
    ScratchDir tmp;
    const fs::path path = tmp / "pub.txt";
    write_public_key_file(path, RabinPublicKey{48010717});
    CHECK(read_binary_file(path) == "RABIN-PUB 1\n48010717\n");
    CHECK(read_public_key_file(path).n == 48010717);
}

TEST_CASE("public key files reject malformed content") {
    ScratchDir tmp;
    const fs::path path = tmp / "pub.txt";

    write_binary_file(path, "RABIN-PUB 2\n48010717\n");
    CHECK(code_of([&] { read_public_key_file(path); }) == Errc::parse_error);

    write_binary_file(path, "RABIN-PUB 1\nforty\n");
    CHECK(code_of([&] { read_public_key_file(path); }) == Errc::parse_error);

    write_binary_file(path, "RABIN-PUB 1\n48010718\n");  // even
    CHECK(code_of([&] { read_public_key_file(path); }) == Errc::parse_error);

    write_binary_file(path, "RABIN-PUB 1\n9\n");  // too small
    CHECK(code_of([&] { read_public_key_file(path); }) == Errc::parse_error);

    write_binary_file(path, "RABIN-PUB 1\n21209\n21209\n");  // extra line
    CHECK(code_of([&] { read_public_key_file(path); }) == Errc::parse_error);
}

TEST_CASE("private key files are exact, validated and roundtrip") {
    ScratchDir tmp;
    const fs::path path = tmp / "priv.txt";
    write_private_key_file(path, RabinPrivateKey{6911, 6947});
    CHECK(read_binary_file(path) == "RABIN-PRIV 1\n6911\n6947\n");
    const RabinPrivateKey sk = read_private_key_file(path);
    CHECK(sk.p == 6911);
    CHECK(sk.q == 6947);

    write_binary_file(path, "RABIN-PRIV 1\n6911\n6911\n");  // equal primes
    CHECK(code_of([&] { read_private_key_file(path); }) == Errc::parse_error);

    write_binary_file(path, "RABIN-PRIV 1\n6911\n21209\n");  // composite
    CHECK(code_of([&] { read_private_key_file(path); }) == Errc::parse_error);
}

TEST_CASE("dna key files use the 13-letter layout") {
    ScratchDir tmp;
    const fs::path path = tmp / "key.dna";
    const DnaSequence key = DnaSequence::from_string("GTTTGGGGTTCCAATCC");
    write_dna_key_file(path, key);
    CHECK(read_binary_file(path) == "G T T T G G G G T T C C A\nA T C C\n");
    CHECK(read_dna_key_file(path) == key);

    write_binary_file(path, "acg t\nT");
    CHECK(read_dna_key_file(path).str() == "ACGTT");

    write_binary_file(path, "ACGT\nAXT\n");
    CHECK(code_of([&] { read_dna_key_file(path); }) == Errc::invalid_nucleotide);
}

TEST_CASE("ciphertext files carry the header and one row per block") {
    ScratchDir tmp;
    const fs::path path = tmp / "ct.txt";
    CipherText ct{4, {BitString::from_string("0101"), BitString::from_string("1100")}};
    write_ciphertext_file(path, ct);
    CHECK(read_binary_file(path) == "DNAOTP-CT 1 4 2\n0101\n1100\n");
    CHECK(read_ciphertext_file(path) == ct);

    const CipherText empty{26, {}};
    write_ciphertext_file(path, empty);
    CHECK(read_binary_file(path) == "DNAOTP-CT 1 26 0\n");
    CHECK(read_ciphertext_file(path) == empty);
}

TEST_CASE("ciphertext files reject malformed content") {
    ScratchDir tmp;
    const fs::path path = tmp / "ct.txt";

    write_binary_file(path, "DNAOTP-CT 1 4 2\n0101\n");  // missing row
    CHECK(code_of([&] { read_ciphertext_file(path); }) == Errc::parse_error);

    write_binary_file(path, "DNAOTP-CT 1 4 1\n010\n");  // short row
    CHECK(code_of([&] { read_ciphertext_file(path); }) == Errc::parse_error);

    write_binary_file(path, "DNAOTP-CT 1 4 1\n01a1\n");  // bad digit
    CHECK(code_of([&] { read_ciphertext_file(path); }) == Errc::parse_error);

    write_binary_file(path, "DNAOTP-CT 1 5 1\n01011\n");  // odd width
    CHECK(code_of([&] { read_ciphertext_file(path); }) == Errc::parse_error);

    write_binary_file(path, "DNAOTP-CT 2 4 0\n");  // wrong version
    CHECK(code_of([&] { read_ciphertext_file(path); }) == Errc::parse_error);

    write_binary_file(path, "");
    CHECK(code_of([&] { read_ciphertext_file(path); }) == Errc::parse_error);
}

TEST_CASE("missing files surface as io errors") {
    ScratchDir tmp;
    CHECK(code_of([&] { read_public_key_file(tmp / "absent.txt"); }) == Errc::io_error);
    CHECK(code_of([&] { read_binary_file(tmp / "absent.txt"); }) == Errc::io_error);
}

TEST_CASE("binary files roundtrip arbitrary bytes") {
    ScratchDir tmp;
    const fs::path path = tmp / "blob";
    std::string blob;
    for (int i = 0; i < 256; ++i) blob.push_back(static_cast<char>(i));
    write_binary_file(path, blob);
    CHECK(read_binary_file(path) == blob);
}
