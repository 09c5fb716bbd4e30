#ifndef STEERGP_SERIALIZE_H_
#define STEERGP_SERIALIZE_H_

#include <string>

#include "steergp/kernel.h"
#include "steergp/mode_field.h"

namespace steergp {

// JSON records. Doubles are written in shortest round-trip form, so
// from_json(to_json(x)) == x bit for bit.
std::string mode_field_to_json(const ModeField& f);
ModeField mode_field_from_json(const std::string& text);

std::string kernel_to_json(const KernelMatrix& k);
KernelMatrix kernel_from_json(const std::string& text);

}  // namespace steergp

#endif  // STEERGP_SERIALIZE_H_
