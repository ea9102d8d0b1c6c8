#pragma once

#include <stdexcept>

namespace multipart {

/// A recurrence produced a non-integral quotient. Never a valid state;
/// it means an arithmetic bug somewhere upstream.
class IntegralityError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace multipart
