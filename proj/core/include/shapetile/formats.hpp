#pragma once

// Tile and certificate documents.
//
// Tile text format, one record per line, '#' starts a comment:
//
//     rect x0 x1 y0 y1 weight
//
// Numbers are integers, "p/q" fractions or finite decimals.  Records are
// superposed, so their order does not matter.  The structured variant is a
// JSON object {"rects": [{"x0": .., "x1": .., "y0": .., "y1": .., "weight": ..}]}
// whose numbers may be JSON strings in any of the text forms, or JSON numbers.
//
// Certificate text format:
//
//     tile                     inline prototile block ...
//     rect ...
//     end
//     tile-file <path>         ... or a reference, relative to the certificate
//     side l
//     anchor ax ay
//     weight w
//     place weight scale sigma tau      (repeated)

#include "shapetile/certify.hpp"
#include "shapetile/tile.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace shapetile {

class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t line, std::size_t column, const std::string& what);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

/// Accepts either format; a document whose first non-blank character is '{'
/// is read as JSON.
WeightedTile parse_tile(std::string_view text);

/// Canonical echo: one record per minimal grid cell, in grid order.
std::string write_tile_text(const WeightedTile& t);
std::string write_tile_json(const WeightedTile& t);

/// `base_dir` resolves `tile-file` references.
Certificate parse_certificate(std::string_view text, const std::filesystem::path& base_dir = {});

std::string write_certificate_text(const Certificate& c);
std::string write_certificate_json(const Certificate& c);

std::string read_file(const std::filesystem::path& p);

}  // namespace shapetile
