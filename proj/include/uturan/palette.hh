#ifndef UTURAN_PALETTE_HH
#define UTURAN_PALETTE_HH

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace uturan
{
    using Color = int;
    using ColorTriple = std::array<Color, 3>;

    /// A set of ordered color triples over the colors [0, k). A triple (x, y, z)
    /// admits an edge v_i v_j v_k (i < j < k in the ordering) when
    /// x = c(v_i, v_j), y = c(v_j, v_k) and z = c(v_i, v_k).
    ///
    /// Every color in [0, k) appears in some triple. The empty palette is the one
    /// exception and is allowed with any positive k; it admits no edge.
    class Palette
    {
    public:
        Palette(int color_count, std::vector<ColorTriple> triples, std::vector<std::string> color_names = {});

        auto color_count() const -> int { return _k; }
        auto triples() const -> const std::vector<ColorTriple> & { return _triples; }
        auto size() const -> std::size_t { return _triples.size(); }
        auto contains(Color x, Color y, Color z) const -> bool;

        /// Human-readable color name; falls back to the index.
        auto color_name(Color) const -> std::string;

        friend auto operator==(const Palette & a, const Palette & b) -> bool
        {
            return a._k == b._k && a._triples == b._triples;
        }

    private:
        int _k;
        std::vector<ColorTriple> _triples;
        std::vector<bool> _member;
        std::vector<std::string> _names;
    };

    namespace colors
    {
        // phi0 and phi8
        inline constexpr Color alpha = 0, beta = 1, gamma = 2;

        // phi3
        inline constexpr Color omega = 0, alpha1 = 1, beta1 = 2, alpha2 = 3, gamma2 = 4, beta3 = 5, gamma3 = 6;
    }

    /// {(alpha, beta, gamma)}.
    auto phi0() -> Palette;

    /// {(alpha1, beta1, omega), (alpha2, omega, gamma2), (omega, beta3, gamma3)}.
    auto phi3() -> Palette;

    /// All (x, y, z) with x in {beta, gamma}, y in {alpha, gamma}, z in {alpha, beta}.
    auto phi8() -> Palette;

    /// Every one of the k^3 triples.
    auto complete_palette(int color_count) -> Palette;

    auto builtin_palette(std::string_view name) -> std::optional<Palette>;
}

#endif
