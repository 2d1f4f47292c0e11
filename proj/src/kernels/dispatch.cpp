#include <cstdlib>
#include <stdexcept>
#include <string>

#include "monge/kernels.hpp"

namespace monge::kernels {

std::string_view backend_name(Backend backend) noexcept {
    switch (backend) {
        case Backend::kScalar: return "scalar";
        case Backend::kAvx2: return "avx2";
    }
    return "unknown";
}

bool available(Backend backend) noexcept {
    switch (backend) {
        case Backend::kScalar: return true;
        case Backend::kAvx2:
#if defined(__x86_64__) || defined(_M_X64)
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
    }
    return false;
}

const KernelTable& table(Backend backend) {
    if (!available(backend))
        throw std::invalid_argument("kernel backend '" + std::string(backend_name(backend)) +
                                    "' is not available on this CPU");
#if defined(__x86_64__) || defined(_M_X64)
    if (backend == Backend::kAvx2) return detail::kAvx2Table;
#endif
    return detail::kScalarTable;
}

namespace {

const KernelTable& select() {
    if (const char* env = std::getenv("MONGE_KERNELS"); env && std::string(env) == "scalar")
        return detail::kScalarTable;
    if (available(Backend::kAvx2)) return table(Backend::kAvx2);
    return detail::kScalarTable;
}

} // namespace

const KernelTable& active() {
    static const KernelTable& chosen = select();
    return chosen;
}

} // namespace monge::kernels
