#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qtwist {

/// Malformed expression text. position() is a 0-based byte offset into the input.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at offset " + std::to_string(pos) + ")"), m_pos(pos)
    {
    }

    std::size_t position() const noexcept { return m_pos; }

private:
    std::size_t m_pos;
};

/// A mathematical precondition failed. code() is a stable kebab-case identifier such as
/// "not-an-A-monomial" or "fm-inconsistent"; what() adds the offending object.
class math_error : public std::runtime_error {
public:
    math_error(std::string code, const std::string& detail)
        : std::runtime_error(code + ": " + detail), m_code(std::move(code))
    {
    }

    const std::string& code() const noexcept { return m_code; }

private:
    std::string m_code;
};

} // namespace qtwist
