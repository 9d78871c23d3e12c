#include "rydmis/io.hpp"

#include <openssl/evp.h>

#include <memory>

namespace rydmis {

std::string sha256_hex(const std::string& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1 || EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1)
        throw std::runtime_error("SHA-256 failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 15]);
    }
    return out;
}

nlohmann::json RunManifest::to_json() const {
    return {{"subcommand", subcommand}, {"inputs", inputs},   {"params", params},
            {"version", kToolVersion},  {"seed", seed},       {"outputs", outputs}};
}

std::string RunManifest::hash() const { return sha256_hex(to_json().dump()); }

}  // namespace rydmis
