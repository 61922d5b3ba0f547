#pragma once

namespace qubml::parallel {

// Process-wide switch for the OpenMP code paths. Timing-sensitive code
// (the scaling audit) turns it off so measurements see the serial kernels.
bool enabled();
void set_enabled(bool on);

struct SerialSection {
  SerialSection();
  ~SerialSection();
  SerialSection(const SerialSection&) = delete;
  SerialSection& operator=(const SerialSection&) = delete;

 private:
  bool prev_;
};

}  // namespace qubml::parallel
