#include "qeur/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <mutex>
#include <string_view>

namespace qeur::kernels {

// Defined in kernels_scalar.cpp / kernels_avx2.cpp.
const Ops* scalar_table();
const Ops* avx2_table();

namespace {

std::atomic<const Ops*> g_active{nullptr};

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") != 0 &&
         __builtin_cpu_supports("fma") != 0;
#else
  return false;
#endif
}

const Ops* resolve_initial() {
  if (const char* env = std::getenv("QEUR_KERNELS")) {
    const std::string_view v(env);
    if (v == "scalar") {
      return scalar_table();
    }
    if (v == "avx2" && avx2_table() != nullptr && cpu_has_avx2()) {
      return avx2_table();
    }
    // Unknown or unavailable override: fall through to autodetection.
  }
  return table(detect_best());
}

}  // namespace

const Ops* table(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return scalar_table();
    case Backend::Avx2:
      return avx2_table();
  }
  return nullptr;
}

Backend detect_best() {
  if (avx2_table() != nullptr && cpu_has_avx2()) {
    return Backend::Avx2;
  }
  return Backend::Scalar;
}

const Ops& active() {
  const Ops* p = g_active.load(std::memory_order_acquire);
  if (p == nullptr) {
    static std::once_flag once;
    // An explicit set_backend() that raced ahead of first use wins.
    std::call_once(once, [] {
      const Ops* expected = nullptr;
      g_active.compare_exchange_strong(expected, resolve_initial(),
                                       std::memory_order_acq_rel);
    });
    p = g_active.load(std::memory_order_acquire);
  }
  return *p;
}

bool set_backend(Backend b) {
  const Ops* t = table(b);
  if (t == nullptr) {
    return false;
  }
  if (b == Backend::Avx2 && !cpu_has_avx2()) {
    return false;
  }
  g_active.store(t, std::memory_order_release);
  return true;
}

const char* active_name() { return active().name; }

}  // namespace qeur::kernels
