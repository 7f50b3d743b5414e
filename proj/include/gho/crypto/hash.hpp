// Copyright 2026 The gho Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <openssl/evp.h>

#include <initializer_list>

#include "gho/bytes.hpp"

namespace gho::crypto {

inline constexpr std::size_t kDigestBytes = 32;

/// SHA-256 over the concatenation of `parts`.
inline Bytes hash_to_digest(std::initializer_list<ByteView> parts) {
  Bytes out(kDigestBytes);
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  if (ctx == nullptr) throw Error(Errc::CryptoBackend, "EVP_MD_CTX_new");
  bool ok = EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) == 1;
  for (auto p : parts) ok = ok && EVP_DigestUpdate(ctx, p.data(), p.size()) == 1;
  unsigned int len = 0;
  ok = ok && EVP_DigestFinal_ex(ctx, out.data(), &len) == 1;
  EVP_MD_CTX_free(ctx);
  if (!ok || len != kDigestBytes) throw Error(Errc::CryptoBackend, "SHA-256 failed");
  return out;
}

inline Bytes hash_to_digest(ByteView data) { return hash_to_digest({data}); }

}  // namespace gho::crypto
