#pragma once

#include "galext/cocycle.hpp"
#include "galext/errors.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace galext {

/**
 * Parse the line-oriented algebra format:
 *
 *     # comment
 *     generators: P1 P2 K1 K2 H J
 *     [K1,H] = i*P1
 *     [J,P1] = i*P2
 *
 * Brackets not listed are zero. Throws ParseError with line/column.
 * docs/algebra-format.md holds the full grammar.
 */
LieAlgebraSpec parse_algebra(std::string_view text);
LieAlgebraSpec load_algebra(const std::filesystem::path &path);

/// Inverse of parse_algebra (one line per nonzero bracket, i < j).
std::string format_algebra(const LieAlgebraSpec &algebra);

} // namespace galext
