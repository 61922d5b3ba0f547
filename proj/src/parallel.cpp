#include "qubml/parallel.hpp"

#include <atomic>

namespace qubml::parallel {

namespace {
std::atomic<bool> g_enabled{true};
}

bool enabled() { return g_enabled.load(std::memory_order_relaxed); }

void set_enabled(bool on) { g_enabled.store(on, std::memory_order_relaxed); }

SerialSection::SerialSection() : prev_(enabled()) { set_enabled(false); }

SerialSection::~SerialSection() { set_enabled(prev_); }

}  // namespace qubml::parallel
