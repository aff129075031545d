#include "factorinv/execution.hpp"

namespace factorinv {

namespace {
thread_local ExecutionSettings tls_settings;
}

const ExecutionSettings& current_settings() noexcept { return tls_settings; }

ScopedSettings::ScopedSettings(ExecutionSettings settings) : previous_(tls_settings) { tls_settings = settings; }

ScopedSettings::~ScopedSettings() { tls_settings = previous_; }

}  // namespace factorinv
