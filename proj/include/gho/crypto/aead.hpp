// Copyright 2026 The gho Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <openssl/evp.h>
#include <openssl/rand.h>

#include <memory>
#include <optional>
#include <random>

#include "gho/bytes.hpp"

namespace gho::crypto {

inline constexpr std::size_t kKeyBytes = 32;
inline constexpr std::size_t kNonceBytes = 12;
inline constexpr std::size_t kTagBytes = 16;

/// Source of per-message nonces. The default draws from the OpenSSL CSPRNG;
/// a seeded source gives reproducible simulator runs.
class NonceSource {
 public:
  NonceSource() = default;
  explicit NonceSource(std::uint64_t seed) : seeded_(std::in_place, seed) {}

  Bytes next() {
    Bytes n(kNonceBytes);
    if (seeded_) {
      for (std::size_t i = 0; i < n.size(); i += 8) {
        auto word = (*seeded_)();
        for (std::size_t j = 0; j < 8 && i + j < n.size(); ++j)
          n[i + j] = static_cast<std::uint8_t>(word >> (8 * j));
      }
    } else if (RAND_bytes(n.data(), static_cast<int>(n.size())) != 1) {
      throw Error(Errc::CryptoBackend, "RAND_bytes");
    }
    return n;
  }

 private:
  std::optional<std::mt19937_64> seeded_;
};

namespace detail {
struct CipherCtxFree {
  void operator()(EVP_CIPHER_CTX* c) const noexcept { EVP_CIPHER_CTX_free(c); }
};
using CipherCtx = std::unique_ptr<EVP_CIPHER_CTX, CipherCtxFree>;

inline CipherCtx new_ctx() {
  CipherCtx ctx(EVP_CIPHER_CTX_new());
  if (!ctx) throw Error(Errc::CryptoBackend, "EVP_CIPHER_CTX_new");
  return ctx;
}
}  // namespace detail

/// AES-256-GCM. Returns ciphertext with the 16-byte tag appended.
inline Bytes seal(ByteView key, ByteView nonce, ByteView aad, ByteView plaintext) {
  if (key.size() != kKeyBytes || nonce.size() != kNonceBytes)
    throw Error(Errc::CryptoBackend, "bad AEAD key or nonce length");
  auto ctx = detail::new_ctx();
  Bytes out(plaintext.size() + kTagBytes);
  int len = 0;
  bool ok = EVP_EncryptInit_ex(ctx.get(), EVP_aes_256_gcm(), nullptr, key.data(), nonce.data()) == 1;
  if (ok && !aad.empty())
    ok = EVP_EncryptUpdate(ctx.get(), nullptr, &len, aad.data(), static_cast<int>(aad.size())) == 1;
  if (ok && !plaintext.empty())
    ok = EVP_EncryptUpdate(ctx.get(), out.data(), &len, plaintext.data(),
                           static_cast<int>(plaintext.size())) == 1;
  ok = ok && EVP_EncryptFinal_ex(ctx.get(), out.data() + plaintext.size(), &len) == 1;
  ok = ok && EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_GCM_GET_TAG, static_cast<int>(kTagBytes),
                                 out.data() + plaintext.size()) == 1;
  if (!ok) throw Error(Errc::CryptoBackend, "AES-GCM encryption failed");
  return out;
}

/// Inverse of seal(); nullopt when the tag does not authenticate.
inline std::optional<Bytes> open(ByteView key, ByteView nonce, ByteView aad, ByteView sealed) {
  if (key.size() != kKeyBytes || nonce.size() != kNonceBytes || sealed.size() < kTagBytes)
    return std::nullopt;
  auto ctx = detail::new_ctx();
  const std::size_t body = sealed.size() - kTagBytes;
  Bytes out(body);
  int len = 0;
  if (EVP_DecryptInit_ex(ctx.get(), EVP_aes_256_gcm(), nullptr, key.data(), nonce.data()) != 1)
    throw Error(Errc::CryptoBackend, "EVP_DecryptInit_ex");
  if (!aad.empty() &&
      EVP_DecryptUpdate(ctx.get(), nullptr, &len, aad.data(), static_cast<int>(aad.size())) != 1)
    return std::nullopt;
  if (body > 0 &&
      EVP_DecryptUpdate(ctx.get(), out.data(), &len, sealed.data(), static_cast<int>(body)) != 1)
    return std::nullopt;
  Bytes tag(sealed.begin() + static_cast<std::ptrdiff_t>(body), sealed.end());
  if (EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_GCM_SET_TAG, static_cast<int>(kTagBytes), tag.data()) != 1)
    return std::nullopt;
  if (EVP_DecryptFinal_ex(ctx.get(), out.data() + body, &len) != 1) return std::nullopt;
  return out;
}

}  // namespace gho::crypto
