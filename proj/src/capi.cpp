// Copyright 2026 The bsk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bsk/bsk.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <fstream>
#include <new>
#include <string>

#include "bsk/braid.hpp"
#include "bsk/burau.hpp"
#include "bsk/error.hpp"
#include "bsk/polyring.hpp"
#include "bsk/scan.hpp"
#include "bsk/skein3.hpp"
#include "bsk/verify.hpp"

struct bsk_poly {
  bsk::ZPoly value;
};

struct bsk_tree {
  bsk::ResolutionTree tree;
};

namespace {

thread_local std::string g_last_error;

bsk_status ToStatus(bsk::ErrorCode code) {
  using bsk::ErrorCode;
  switch (code) {
    case ErrorCode::kParseError: return BSK_ERR_PARSE;
    case ErrorCode::kIndexOutOfRange: return BSK_ERR_INDEX_OUT_OF_RANGE;
    case ErrorCode::kNotOrdered: return BSK_ERR_NOT_ORDERED;
    case ErrorCode::kStrandMismatch: return BSK_ERR_STRAND_MISMATCH;
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kNotDescending:
    case ErrorCode::kNoSquare: return BSK_ERR_INVALID_ARGUMENT;
    case ErrorCode::kIoError: return BSK_ERR_IO;
    case ErrorCode::kVerificationFailure: return BSK_ERR_VERIFICATION;
    case ErrorCode::kNotDivisible:
    case ErrorCode::kNotInImage:
    case ErrorCode::kUnresolvable:
    case ErrorCode::kInternalInconsistency: return BSK_ERR_INTERNAL;
  }
  return BSK_ERR_INTERNAL;
}

bsk_status Fail(bsk_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
bsk_status Guard(F&& body) {
  try {
    return body();
  } catch (const bsk::Error& e) {
    return Fail(ToStatus(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(BSK_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(BSK_ERR_INTERNAL, e.what());
  } catch (...) {
    return Fail(BSK_ERR_INTERNAL, "unknown error");
  }
}

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bsk_status NullArgument(const char* what) {
  return Fail(BSK_ERR_NULL_POINTER, std::string("null argument: ") + what);
}

}  // namespace

extern "C" {

const char* bsk_version(void) { return "1.0.0"; }

const char* bsk_status_name(bsk_status status) {
  switch (status) {
    case BSK_OK: return "ok";
    case BSK_ERR_PARSE: return "parse error";
    case BSK_ERR_INDEX_OUT_OF_RANGE: return "index out of range";
    case BSK_ERR_NOT_ORDERED: return "band generator not ordered";
    case BSK_ERR_STRAND_MISMATCH: return "strand mismatch";
    case BSK_ERR_INVALID_ARGUMENT: return "invalid argument";
    case BSK_ERR_NULL_POINTER: return "null pointer";
    case BSK_ERR_IO: return "i/o error";
    case BSK_ERR_VERIFICATION: return "verification failure";
    case BSK_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* bsk_last_error(void) { return g_last_error.c_str(); }

void bsk_string_free(char* s) { std::free(s); }

bsk_status bsk_conway(const char* word, bsk_alphabet alphabet, int strands, bsk_poly** out) {
  if (word == nullptr) return NullArgument("word");
  if (out == nullptr) return NullArgument("out");
  *out = nullptr;
  return Guard([&] {
    bsk::ZPoly value;
    switch (alphabet) {
      case BSK_ALPHABET_ARTIN: value = bsk::ConwayViaBurau(bsk::ParseArtin(word, strands)); break;
      case BSK_ALPHABET_BAND: value = bsk::ConwayViaBurau(bsk::ParseBand(word, strands)); break;
      default: return Fail(BSK_ERR_INVALID_ARGUMENT, "unknown alphabet");
    }
    *out = new bsk_poly{std::move(value)};
    return BSK_OK;
  });
}

void bsk_poly_free(bsk_poly* p) { delete p; }

int bsk_poly_degree(const bsk_poly* p) { return p == nullptr ? -1 : p->value.Degree(); }

int bsk_poly_is_nonneg(const bsk_poly* p) {
  return p != nullptr && bsk::IsNonNegative(p->value) ? 1 : 0;
}

bsk_status bsk_poly_coefficient(const bsk_poly* p, int degree, char** out) {
  if (p == nullptr) return NullArgument("poly");
  if (out == nullptr) return NullArgument("out");
  return Guard([&] {
    *out = CopyString(p->value.Coefficient(degree).get_str());
    return BSK_OK;
  });
}

bsk_status bsk_poly_render(const bsk_poly* p, bsk_format format, char** out) {
  if (p == nullptr) return NullArgument("poly");
  if (out == nullptr) return NullArgument("out");
  return Guard([&] {
    switch (format) {
      case BSK_FORMAT_HUMAN: *out = CopyString(p->value.ToHuman()); return BSK_OK;
      case BSK_FORMAT_JSON: *out = CopyString(p->value.ToJson()); return BSK_OK;
      default: return Fail(BSK_ERR_INVALID_ARGUMENT, "polynomials render as human or json");
    }
  });
}

bsk_status bsk_tree_resolve(const char* word, bsk_tree** out) {
  if (word == nullptr) return NullArgument("word");
  if (out == nullptr) return NullArgument("out");
  *out = nullptr;
  return Guard([&] {
    *out = new bsk_tree{bsk::Resolve(bsk::ParseWord3(word))};
    return BSK_OK;
  });
}

void bsk_tree_free(bsk_tree* t) { delete t; }

size_t bsk_tree_leaf_count(const bsk_tree* t) { return t == nullptr ? 0 : t->tree.LeafCount(); }

int bsk_tree_depth(const bsk_tree* t) { return t == nullptr ? -1 : t->tree.Depth(); }

bsk_status bsk_tree_value(const bsk_tree* t, bsk_poly** out) {
  if (t == nullptr) return NullArgument("tree");
  if (out == nullptr) return NullArgument("out");
  return Guard([&] {
    *out = new bsk_poly{t->tree.Value()};
    return BSK_OK;
  });
}

bsk_status bsk_tree_render(const bsk_tree* t, bsk_format format, char** out) {
  if (t == nullptr) return NullArgument("tree");
  if (out == nullptr) return NullArgument("out");
  return Guard([&] {
    switch (format) {
      case BSK_FORMAT_JSON: *out = CopyString(t->tree.ToJson()); return BSK_OK;
      case BSK_FORMAT_DOT: *out = CopyString(t->tree.ToDot()); return BSK_OK;
      default: return Fail(BSK_ERR_INVALID_ARGUMENT, "trees render as json or dot");
    }
  });
}

bsk_status bsk_scan(int max_len, int jobs, const char* out_path, bsk_scan_summary* summary) {
  return Guard([&] {
    bsk::ScanSummary s;
    if (out_path != nullptr) {
      std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
      if (!file) return Fail(BSK_ERR_IO, std::string("cannot open ") + out_path + " for writing");
      s = bsk::RunScan({max_len, jobs}, &file);
    } else {
      s = bsk::RunScan({max_len, jobs}, nullptr);
    }
    if (summary != nullptr) {
      summary->words = s.words;
      summary->distinct_polynomials = s.distinct_polynomials;
      summary->max_degree = s.max_degree;
    }
    return BSK_OK;
  });
}

uint64_t bsk_default_seed(void) { return bsk::DefaultSeed(); }

bsk_status bsk_verify(uint64_t seed, bsk_claim_fn on_claim, void* user, int* all_passed) {
  return Guard([&] {
    bool ok = true;
    bsk::RunVerification(seed, [&](const bsk::ClaimResult& r) {
      ok = ok && r.passed;
      if (on_claim != nullptr) on_claim(r.name.c_str(), r.passed ? 1 : 0, r.detail.c_str(), r.seconds, user);
    });
    if (all_passed != nullptr) *all_passed = ok ? 1 : 0;
    return BSK_OK;
  });
}

}  // extern "C"
