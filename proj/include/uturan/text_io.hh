#ifndef UTURAN_TEXT_IO_HH
#define UTURAN_TEXT_IO_HH

#include <uturan/hypergraph.hh>
#include <uturan/palette.hh>

#include <iosfwd>
#include <string>
#include <vector>

namespace uturan
{
    enum class ParseMode
    {
        strict,
        normalize
    };

    /// hg/1: a header line `hg <k> <n> <m>` then m lines of k ascending vertex
    /// indices. Lines starting with '#' and blank lines are ignored.
    auto read_hypergraph(std::istream &, ParseMode = ParseMode::strict) -> Hypergraph;
    auto write_hypergraph(std::ostream &, const Hypergraph &) -> void;

    /// `palette <k> <t>` then t lines `x y z`.
    auto read_palette(std::istream &) -> Palette;
    auto write_palette(std::ostream &, const Palette &) -> void;

    /// A built-in name (phi0, phi3, phi8) or else a palette file path.
    auto resolve_palette(const std::string & name_or_path) -> Palette;

    namespace detail
    {
        /// Splits the next significant line into integer tokens. Returns false at
        /// end of input. Throws MalformedInput on a non-integer token.
        auto next_int_line(std::istream &, std::vector<long long> & tokens, std::string & keyword, int & line_number)
            -> bool;
    }
}

#endif
