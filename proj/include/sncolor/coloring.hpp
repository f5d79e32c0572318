#pragma once

#include <sncolor/graph.hpp>

#include <bit>
#include <cstdint>
#include <vector>

namespace sncolor
{
    /// Colours are 1..k; 0 marks an uncoloured vertex.
    using Color = int;
    inline constexpr Color no_color = 0;

    /// Colour sets for the extension engine support k up to this many colours.
    inline constexpr int max_colors = 64;

    /// Subset of {1..64} as a bitmask.
    class ColorSet
    {
        public:
            constexpr ColorSet() = default;

            static constexpr auto all(int k) -> ColorSet
            {
                ColorSet s;
                s._bits = (k >= 64) ? ~std::uint64_t{ 0 } : ((std::uint64_t{ 1 } << k) - 1);
                return s;
            }

            constexpr auto contains(Color c) const -> bool { return (_bits >> (c - 1)) & 1; }
            constexpr auto insert(Color c) -> void { _bits |= std::uint64_t{ 1 } << (c - 1); }
            constexpr auto erase(Color c) -> void { _bits &= ~(std::uint64_t{ 1 } << (c - 1)); }
            constexpr auto size() const -> int { return std::popcount(_bits); }
            constexpr auto empty() const -> bool { return _bits == 0; }

            /// Smallest member; the set must be nonempty.
            constexpr auto first() const -> Color { return std::countr_zero(_bits) + 1; }

            /// Iterate members in ascending order.
            template <typename F>
            constexpr auto for_each(F && f) const -> void
            {
                for (auto b = _bits ; b ; b &= b - 1)
                    f(std::countr_zero(b) + 1);
            }

            constexpr auto bits() const -> std::uint64_t { return _bits; }

            friend constexpr auto operator== (ColorSet, ColorSet) -> bool = default;

        private:
            std::uint64_t _bits = 0;
    };

    /**
     * A partial map from vertices to colours {1..k}. The domain is the set S of
     * coloured vertices; colour classes are derived on demand.
     */
    class PartialColoring
    {
        public:
            PartialColoring() = default;
            PartialColoring(int vertex_count, int k);

            auto k() const noexcept -> int { return _k; }
            auto vertex_count() const noexcept -> int { return static_cast<int>(_colors.size()); }

            auto operator[] (Vertex v) const -> Color { return _colors[v]; }
            auto colored(Vertex v) const -> bool { return _colors[v] != no_color; }

            /// Throws Error(InvalidColoring) if c is outside 0..k.
            auto assign(Vertex v, Color c) -> void;
            auto clear(Vertex v) -> void { _colors[v] = no_color; }

            auto domain() const -> std::vector<Vertex>;
            auto domain_size() const -> int;
            auto complete() const -> bool { return domain_size() == vertex_count(); }
            auto used_colors() const -> ColorSet;
            auto distinct_colors() const -> int { return used_colors().size(); }
            auto classes() const -> std::vector<std::vector<Vertex>>;

            auto colors() const noexcept -> const std::vector<Color> & { return _colors; }

            /// Colours renamed by `permutation`, indexed 1..k (entry 0 is ignored).
            auto permuted(const std::vector<Color> & permutation) const -> PartialColoring;

            /// Same colours, with vertex v moved to vertex_map[v].
            auto relabelled(const std::vector<Vertex> & vertex_map) const -> PartialColoring;

            friend auto operator== (const PartialColoring &, const PartialColoring &) -> bool = default;

        private:
            int _k = 0;
            std::vector<Color> _colors;
    };

    /// No edge has both endpoints coloured alike. Vertices outside the domain are ignored.
    auto is_proper(const Graph & g, const PartialColoring & c) -> bool;

    /// Per-vertex candidate lists, L(w) = {1..k} minus the colours of coloured
    /// neighbours. Coloured vertices have an empty list.
    using ColorListState = std::vector<ColorSet>;

    auto color_lists(const Graph & g, const PartialColoring & c) -> ColorListState;
}
