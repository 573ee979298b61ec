#include <atomic>
#include <cstdlib>
#include <string>

#include "eulerform/kernels.hpp"

namespace eulerform::kernels {
namespace {

const KernelTable* best() {
  auto all = available();
  const KernelTable* pick = all.back();
  if (const char* env = std::getenv("EULERFORM_KERNELS")) {
    for (const auto* t : all)
      if (std::string_view(t->name) == env) pick = t;
  }
  return pick;
}

std::atomic<const KernelTable*>& slot() {
  static std::atomic<const KernelTable*> current{best()};
  return current;
}

}  // namespace

std::vector<const KernelTable*> available() {
  std::vector<const KernelTable*> out{&scalar_table()};
  for (const KernelTable* t : {detail::sse2_table(), detail::avx2_table(), detail::neon_table()})
    if (t != nullptr) out.push_back(t);
  return out;
}

const KernelTable& active() { return *slot().load(std::memory_order_relaxed); }

bool select(std::string_view name) {
  for (const auto* t : available()) {
    if (name == t->name) {
      slot().store(t, std::memory_order_relaxed);
      return true;
    }
  }
  return false;
}

}  // namespace eulerform::kernels
