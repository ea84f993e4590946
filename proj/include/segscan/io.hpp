#pragma once

#include <array>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "segscan/core.hpp"
#include "segscan/errors.hpp"
#include "segscan/matrix.hpp"

namespace segscan {

enum class InputFormat { numbers, numbers_with_widths, fasta };
enum class OutputMode { json, tsv };

struct FastaRecord {
    std::string name;
    index_t start = 0;  // 1-based element range covered by this record
    index_t end = 0;
};

/// Per-symbol scores for sequence input. Symbols absent from the table score
/// zero and are tallied as unknown.
struct ScoringTable {
    std::array<double, 256> score{};
    std::array<bool, 256> known{};

    void set(char symbol, double value) {
        const auto up = static_cast<unsigned char>(std::toupper(static_cast<unsigned char>(symbol)));
        const auto lo = static_cast<unsigned char>(std::tolower(up));
        score[up] = value;
        known[up] = true;
        score[lo] = value;
        known[lo] = true;
    }

    /// C and G score 1, every other IUPAC nucleotide code scores 0.
    static ScoringTable dna_default() {
        ScoringTable t;
        for (char c : {'A', 'T', 'U', 'R', 'Y', 'S', 'W', 'K', 'M', 'B', 'D', 'H', 'V', 'N'})
            t.set(c, 0.0);
        t.set('C', 1.0);
        t.set('G', 1.0);
        return t;
    }

    /// Applies overrides of the form "C=1,G=1,A=0".
    void apply_overrides(const std::string& spec) {
        std::size_t pos = 0;
        while (pos < spec.size()) {
            std::size_t next = spec.find(',', pos);
            if (next == std::string::npos) next = spec.size();
            const std::string_view item(spec.data() + pos, next - pos);
            if (item.size() < 3 || item[1] != '=')
                throw std::invalid_argument("bad scoring entry '" + std::string(item) +
                                            "', expected SYMBOL=VALUE");
            char* endp = nullptr;
            const std::string num(item.substr(2));
            const double v = std::strtod(num.c_str(), &endp);
            if (endp != num.c_str() + num.size())
                throw std::invalid_argument("bad scoring value in '" + std::string(item) + "'");
            set(item[0], v);
            pos = next + 1;
        }
    }
};

struct InputMeta {
    std::vector<FastaRecord> records;
    std::uint64_t unknown_symbols = 0;
    bool fasta = false;
};

namespace detail_io {

inline double parse_number(std::string_view tok, std::size_t line) {
    const std::string s(tok);
    char* endp = nullptr;
    const double v = std::strtod(s.c_str(), &endp);
    if (endp != s.c_str() + s.size()) throw ParseError(line, "bad number '" + s + "'");
    return v;
}

template <class Fn>
void for_each_token(const std::string& text, Fn&& fn) {
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i > start) fn(std::string_view(text.data() + start, i - start));
    }
}

}  // namespace detail_io

/// Walks the input and hands each element to the sink as soon as it is read,
/// so callers can drive a streaming engine directly. Returns record metadata
/// for sequence input.
template <class Sink>
InputMeta feed_input(std::istream& in, InputFormat fmt, const ScoringTable& table, Sink&& sink) {
    InputMeta meta;
    std::string line;
    std::size_t lineno = 0;
    index_t emitted = 0;

    switch (fmt) {
        case InputFormat::numbers:
            while (std::getline(in, line)) {
                ++lineno;
                detail_io::for_each_token(line, [&](std::string_view tok) {
                    sink(Element{detail_io::parse_number(tok, lineno), 1.0});
                    ++emitted;
                });
            }
            break;
        case InputFormat::numbers_with_widths:
            while (std::getline(in, line)) {
                ++lineno;
                std::vector<std::string_view> toks;
                detail_io::for_each_token(line, [&](std::string_view t) { toks.push_back(t); });
                if (toks.empty()) continue;
                if (toks.size() != 2)
                    throw ParseError(lineno, "expected 'value width'");
                const double v = detail_io::parse_number(toks[0], lineno);
                const double w = detail_io::parse_number(toks[1], lineno);
                if (!(w > 0.0)) throw NonPositiveWidth(lineno);
                sink(Element{v, w});
                ++emitted;
            }
            break;
        case InputFormat::fasta: {
            meta.fasta = true;
            bool open = false;
            FastaRecord cur;
            auto close = [&] {
                if (open && cur.end >= cur.start) meta.records.push_back(cur);
                open = false;
            };
            while (std::getline(in, line)) {
                ++lineno;
                if (!line.empty() && line.back() == '\r') line.pop_back();
                if (!line.empty() && line[0] == '>') {
                    close();
                    cur = FastaRecord{};
                    std::size_t s = 1;
                    while (s < line.size() && std::isspace(static_cast<unsigned char>(line[s]))) ++s;
                    std::size_t e = s;
                    while (e < line.size() && !std::isspace(static_cast<unsigned char>(line[e]))) ++e;
                    cur.name = line.substr(s, e - s);
                    cur.start = emitted + 1;
                    cur.end = emitted;
                    open = true;
                    continue;
                }
                for (char ch : line) {
                    if (std::isspace(static_cast<unsigned char>(ch))) continue;
                    if (!open) {  // sequence data before any header
                        cur = FastaRecord{"", emitted + 1, emitted};
                        open = true;
                    }
                    const auto u = static_cast<unsigned char>(ch);
                    if (!table.known[u]) ++meta.unknown_symbols;
                    sink(Element{table.score[u], 1.0});
                    ++emitted;
                    cur.end = emitted;
                }
            }
            close();
            break;
        }
    }
    if (emitted == 0) throw EmptyInput();
    return meta;
}

struct ParsedInput {
    std::vector<Element> elements;
    InputMeta meta;
};

inline ParsedInput parse_input(std::istream& in, InputFormat fmt,
                               const ScoringTable& table = ScoringTable::dna_default()) {
    ParsedInput out;
    out.meta = feed_input(in, fmt, table, [&](Element e) { out.elements.push_back(e); });
    return out;
}

/// 2-D input: a "rows m cols n" header followed by m rows of n values.
inline Matrix2D parse_matrix(std::istream& in) {
    std::vector<std::pair<std::string, std::size_t>> toks;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        detail_io::for_each_token(line, [&](std::string_view t) {
            toks.emplace_back(std::string(t), lineno);
        });
    }
    if (toks.empty()) throw EmptyInput();
    if (toks.size() < 4 || toks[0].first != "rows" || toks[2].first != "cols")
        throw ParseError(toks[0].second, "expected header 'rows m cols n'");
    const auto m = static_cast<index_t>(detail_io::parse_number(toks[1].first, toks[1].second));
    const auto n = static_cast<index_t>(detail_io::parse_number(toks[3].first, toks[3].second));
    if (m < 1 || n < 1) throw ParseError(toks[1].second, "matrix must have positive shape");
    const std::size_t need = static_cast<std::size_t>(m) * static_cast<std::size_t>(n);
    if (toks.size() != 4 + need)
        throw ParseError(toks.back().second, "expected " + std::to_string(need) +
                                                 " matrix values, got " +
                                                 std::to_string(toks.size() - 4));
    std::vector<double> values;
    values.reserve(need);
    for (std::size_t i = 4; i < toks.size(); ++i)
        values.push_back(detail_io::parse_number(toks[i].first, toks[i].second));
    return Matrix2D(m, n, std::move(values));
}

/// Reals print with nine significant digits; byte-identical across runs.
inline std::string fmt_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

namespace detail_io {

inline std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

inline std::string json_segment(const ScoredSegment& s) {
    return "{\"start\":" + std::to_string(s.seg.first) + ",\"end\":" + std::to_string(s.seg.last) +
           ",\"sum\":" + fmt_real(s.sum) + ",\"width\":" + fmt_real(s.width) +
           ",\"density\":" + fmt_real(s.density) + "}";
}

inline std::string tsv_segment(const ScoredSegment& s) {
    return std::to_string(s.seg.first) + "\t" + std::to_string(s.seg.last) + "\t" +
           fmt_real(s.sum) + "\t" + fmt_real(s.width) + "\t" + fmt_real(s.density);
}

inline std::string json_meta_prefix(const InputMeta& meta) {
    std::string out = "{\"records\":[";
    for (std::size_t i = 0; i < meta.records.size(); ++i) {
        const FastaRecord& r = meta.records[i];
        if (i) out += ",";
        out += "{\"name\":\"" + json_escape(r.name) + "\",\"start\":" + std::to_string(r.start) +
               ",\"end\":" + std::to_string(r.end) + "}";
    }
    out += "],\"unknown_symbols\":" + std::to_string(meta.unknown_symbols) + ",\"result\":";
    return out;
}

inline std::string tsv_meta_prefix(const InputMeta& meta) {
    std::string out;
    for (const FastaRecord& r : meta.records)
        out += "# record\t" + r.name + "\t" + std::to_string(r.start) + "\t" +
               std::to_string(r.end) + "\n";
    out += "# unknown_symbols\t" + std::to_string(meta.unknown_symbols) + "\n";
    return out;
}

inline std::string wrap(const std::string& json_body, const std::string& tsv_body, OutputMode mode,
                        const InputMeta* meta) {
    if (mode == OutputMode::json) {
        if (meta && meta->fasta) return json_meta_prefix(*meta) + json_body + "}\n";
        return json_body + "\n";
    }
    if (meta && meta->fasta) return tsv_meta_prefix(*meta) + tsv_body;
    return tsv_body;
}

constexpr const char* kSegmentHeader = "start\tend\tsum\twidth\tdensity\n";

}  // namespace detail_io

inline std::string format_output(const ScoredSegment& s, OutputMode mode,
                                 const InputMeta* meta = nullptr) {
    return detail_io::wrap(detail_io::json_segment(s),
                           std::string(detail_io::kSegmentHeader) + detail_io::tsv_segment(s) +
                               "\n",
                           mode, meta);
}

inline std::string format_output(const std::vector<ScoredSegment>& list, OutputMode mode,
                                 const InputMeta* meta = nullptr) {
    std::string json = "[";
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (i) json += ",";
        json += detail_io::json_segment(list[i]);
    }
    json += "]";
    std::string tsv = detail_io::kSegmentHeader;
    for (const ScoredSegment& s : list) tsv += detail_io::tsv_segment(s) + "\n";
    return detail_io::wrap(json, tsv, mode, meta);
}

inline std::string format_output(const SubarrayResult& r, OutputMode mode) {
    const std::string json = "{\"r1\":" + std::to_string(r.r1) + ",\"r2\":" + std::to_string(r.r2) +
                             ",\"c1\":" + std::to_string(r.c1) + ",\"c2\":" + std::to_string(r.c2) +
                             ",\"sum\":" + fmt_real(r.sum) + ",\"width\":" + fmt_real(r.width) +
                             ",\"density\":" + fmt_real(r.density) + "}";
    const std::string tsv = std::string("r1\tr2\tc1\tc2\tsum\twidth\tdensity\n") +
                            std::to_string(r.r1) + "\t" + std::to_string(r.r2) + "\t" +
                            std::to_string(r.c1) + "\t" + std::to_string(r.c2) + "\t" +
                            fmt_real(r.sum) + "\t" + fmt_real(r.width) + "\t" +
                            fmt_real(r.density) + "\n";
    return detail_io::wrap(json, tsv, mode, nullptr);
}

inline std::string format_count(index_t count, OutputMode mode, const InputMeta* meta = nullptr) {
    return detail_io::wrap("{\"count\":" + std::to_string(count) + "}",
                           "count\n" + std::to_string(count) + "\n", mode, meta);
}

}  // namespace segscan
