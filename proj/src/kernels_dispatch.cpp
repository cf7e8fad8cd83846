// Copyright 2026 The spinlv Authors
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

#include "spinlv/kernels.hpp"

#include <cstdlib>
#include <stdexcept>

namespace spinlv::kernels {
namespace {

const Backend* g_forced = nullptr;

const Backend* select() {
  if (g_forced != nullptr) {
    return g_forced;
  }
  if (const char* env = std::getenv("SPINLV_KERNELS")) {
    std::string name(env);
    if (name == "scalar") {
      return &scalar_backend();
    }
    if (name == "avx2") {
      if (avx2_backend() != nullptr && avx2_runtime_supported()) {
        return avx2_backend();
      }
      return &scalar_backend(); // requested backend unavailable, fall back
    }
    // "auto" or anything else: fall through to detection
  }
  if (avx2_backend() != nullptr && avx2_runtime_supported()) {
    return avx2_backend();
  }
  return &scalar_backend();
}

} // namespace

bool avx2_runtime_supported() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const Backend& active() {
  // Re-evaluated only when a force request changes it.
  static const Backend* chosen = select();
  if (g_forced != nullptr) {
    return *g_forced;
  }
  return *chosen;
}

void force_backend(const std::string& name) {
  if (name == "scalar") {
    g_forced = &scalar_backend();
    return;
  }
  if (name == "avx2") {
    if (avx2_backend() == nullptr || !avx2_runtime_supported()) {
      throw std::runtime_error("avx2 kernels unavailable on this machine");
    }
    g_forced = avx2_backend();
    return;
  }
  if (name == "auto") {
    g_forced = nullptr;
    return;
  }
  throw std::invalid_argument("unknown kernel backend: " + name);
}

} // namespace spinlv::kernels
