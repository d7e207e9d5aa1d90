#pragma once

// Allocator backing large flat arrays with 2 MiB-aligned anonymous mappings
// marked for transparent hugepages.  Random access over tens of megabytes is
// TLB bound on 4 KiB pages; with 2 MiB pages the walk cost mostly vanishes.
// Allocations below one huge page, and every allocation on non-Linux hosts,
// fall back to plain operator new.

#include <cstddef>
#include <cstdint>
#include <new>
#include <vector>

#if defined(__linux__)
#include <sys/mman.h>
#endif

namespace opst {

template <class T>
class HugePageAllocator {
 public:
  using value_type = T;

  HugePageAllocator() = default;
  template <class U>
  HugePageAllocator(const HugePageAllocator<U>&) {}

  static constexpr std::size_t kHugePage = std::size_t{2} << 20;

  T* allocate(std::size_t count) {
    const std::size_t bytes = count * sizeof(T);
#if defined(__linux__)
    if (bytes >= kHugePage) {
      void* p = map_aligned(rounded(bytes));
      if (!p) throw std::bad_alloc();  // mapped and new'd blocks must not mix
      return static_cast<T*>(p);
    }
#endif
    return static_cast<T*>(::operator new(bytes));
  }

  void deallocate(T* p, std::size_t count) noexcept {
    const std::size_t bytes = count * sizeof(T);
#if defined(__linux__)
    if (bytes >= kHugePage) {
      ::munmap(p, rounded(bytes));
      return;
    }
#endif
    ::operator delete(p);
  }

  bool operator==(const HugePageAllocator&) const { return true; }

 private:
  static std::size_t rounded(std::size_t bytes) {
    return (bytes + kHugePage - 1) & ~(kHugePage - 1);
  }

#if defined(__linux__)
  // mmap aligns to the base page only; map one huge page extra and trim the
  // misaligned head and tail so the advice covers the whole block.
  static void* map_aligned(std::size_t len) {
    const std::size_t over = len + kHugePage;
    void* raw = ::mmap(nullptr, over, PROT_READ | PROT_WRITE,
                       MAP_PRIVATE | MAP_ANONYMOUS, -1, 0);
    if (raw == MAP_FAILED) return nullptr;
    const auto base = reinterpret_cast<std::uintptr_t>(raw);
    const std::uintptr_t aligned = (base + kHugePage - 1) & ~(kHugePage - 1);
    const std::size_t head = aligned - base;
    if (head) ::munmap(raw, head);
    const std::size_t tail = over - len - head;
    if (tail) ::munmap(reinterpret_cast<void*>(aligned + len), tail);
    ::madvise(reinterpret_cast<void*>(aligned), len, MADV_HUGEPAGE);
    return reinterpret_cast<void*>(aligned);
  }
#endif
};

// Vector type for the arrays worth backing with huge pages.
template <class T>
using BigVector = std::vector<T, HugePageAllocator<T>>;

}  // namespace opst
