#pragma once

namespace wwspdc {

// Labels for the two downconversion field modes: signal (s) and idler (i).
enum class Mode { s, i };

}  // namespace wwspdc
