#pragma once

#include <cctype>
#include <sstream>
#include <string>

#include "toric/divisor.hpp"

namespace toric {

struct FanFile {
    Fan fan;
    std::optional<LineBundle> bundle;
};

namespace detail {

struct Token {
    std::string text;
    int line;
    int column;
};

inline std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> tokens;
    int line = 1;
    int column = 1;
    std::string current;
    int start_col = 1;
    bool in_comment = false;
    auto flush = [&]() {
        if (!current.empty()) {
            tokens.push_back({current, line, start_col});
            current.clear();
        }
    };
    // newline tokens delimit rows of the rays/cones sections
    for (char ch : text) {
        if (ch == '\n') {
            flush();
            tokens.push_back({"\n", line, column});
            ++line;
            column = 1;
            in_comment = false;
            continue;
        }
        if (in_comment) {
            ++column;
            continue;
        }
        if (ch == '#') {
            flush();
            in_comment = true;
        } else if (std::isspace(static_cast<unsigned char>(ch))) {
            flush();
        } else {
            if (current.empty()) start_col = column;
            current.push_back(ch);
        }
        ++column;
    }
    flush();
    tokens.push_back({"\n", line, column});
    return tokens;
}

inline Int parse_int(const Token& t) {
    std::size_t pos = 0;
    Int value = 0;
    try {
        value = std::stoll(t.text, &pos);
    } catch (const std::exception&) {
        throw ParseError(t.line, t.column, "expected an integer, found '" + t.text + "'");
    }
    if (pos != t.text.size())
        throw ParseError(t.line, t.column, "expected an integer, found '" + t.text + "'");
    return value;
}

}  // namespace detail

// Grammar (sections in this order, '#' starts a comment):
//   dim <n>
//   rays
//     one row of n integers per ray
//   cones
//     one row of n 1-based ray indices per maximal cone
//   bundle          (optional)
//     one integer coefficient per ray, any line layout
inline FanFile parse_fan_file(const std::string& text) {
    auto tokens = detail::tokenize(text);
    std::size_t pos = 0;

    auto at_end = [&]() { return pos >= tokens.size(); };
    auto skip_newlines = [&]() {
        while (!at_end() && tokens[pos].text == "\n") ++pos;
    };
    auto expect_word = [&](const std::string& word) {
        skip_newlines();
        if (at_end())
            throw ParseError(tokens.back().line, tokens.back().column,
                             "expected '" + word + "' before end of file");
        if (tokens[pos].text != word)
            throw ParseError(tokens[pos].line, tokens[pos].column,
                             "expected '" + word + "', found '" + tokens[pos].text + "'");
        ++pos;
    };

    expect_word("dim");
    if (at_end() || tokens[pos].text == "\n")
        throw ParseError(tokens[pos - 1].line, tokens[pos - 1].column, "missing dimension value");
    const Int dim_value = detail::parse_int(tokens[pos]);
    if (dim_value < 1 || dim_value > 16)
        throw ParseError(tokens[pos].line, tokens[pos].column, "dimension out of range");
    const int n = static_cast<int>(dim_value);
    ++pos;

    auto read_rows = [&](const std::string& section, const std::string& next_a,
                         const std::string& next_b) {
        std::vector<std::vector<Int>> rows;
        for (;;) {
            skip_newlines();
            if (at_end()) break;
            if (tokens[pos].text == next_a || tokens[pos].text == next_b) break;
            std::vector<Int> row;
            const int row_line = tokens[pos].line;
            while (!at_end() && tokens[pos].text != "\n") {
                row.push_back(detail::parse_int(tokens[pos]));
                ++pos;
            }
            if (static_cast<int>(row.size()) != n)
                throw ParseError(row_line, 1,
                                 section + " row has " + std::to_string(row.size()) +
                                     " entries, expected " + std::to_string(n));
            rows.push_back(std::move(row));
        }
        return rows;
    };

    expect_word("rays");
    auto ray_rows = read_rows("ray", "cones", "cones");
    if (ray_rows.empty())
        throw ParseError(tokens[std::min(pos, tokens.size() - 1)].line, 1, "no rays given");

    expect_word("cones");
    auto cone_rows = read_rows("cone", "bundle", "bundle");
    if (cone_rows.empty())
        throw ParseError(tokens[std::min(pos, tokens.size() - 1)].line, 1, "no cones given");

    std::optional<std::vector<Int>> bundle_coeffs;
    skip_newlines();
    if (!at_end() && tokens[pos].text == "bundle") {
        const auto bundle_tok = tokens[pos];
        ++pos;
        std::vector<Int> coeffs;
        for (;;) {
            skip_newlines();
            if (at_end()) break;
            coeffs.push_back(detail::parse_int(tokens[pos]));
            ++pos;
        }
        if (coeffs.size() != ray_rows.size())
            throw ParseError(bundle_tok.line, bundle_tok.column,
                             "bundle has " + std::to_string(coeffs.size()) +
                                 " coefficients, expected one per ray (" +
                                 std::to_string(ray_rows.size()) + ")");
        bundle_coeffs = std::move(coeffs);
    } else {
        skip_newlines();
        if (!at_end())
            throw ParseError(tokens[pos].line, tokens[pos].column,
                             "unexpected content '" + tokens[pos].text + "'");
    }

    std::vector<LatticeVector> rays;
    rays.reserve(ray_rows.size());
    for (auto& r : ray_rows) rays.emplace_back(std::move(r));
    std::vector<Cone> cones;
    cones.reserve(cone_rows.size());
    for (auto& row : cone_rows) {
        Cone c;
        for (Int idx : row) {
            if (idx < 1 || idx > static_cast<Int>(rays.size()))
                throw ValidationError("cone ray index " + std::to_string(idx) +
                                      " out of range 1.." + std::to_string(rays.size()));
            c.ray_indices.push_back(static_cast<int>(idx) - 1);
        }
        cones.push_back(std::move(c));
    }

    FanFile out{Fan::make(n, std::move(rays), std::move(cones)), std::nullopt};
    if (bundle_coeffs) out.bundle = LineBundle(out.fan, std::move(*bundle_coeffs));
    return out;
}

inline std::string serialize_fan_file(const Fan& fan, const LineBundle* bundle = nullptr,
                                      const std::string& header_comment = "") {
    std::ostringstream out;
    if (!header_comment.empty()) out << "# " << header_comment << "\n";
    out << "dim " << fan.dim() << "\n";
    out << "rays\n";
    for (const auto& r : fan.rays()) {
        for (std::size_t j = 0; j < r.dim(); ++j) out << (j ? " " : "") << r[j];
        out << "\n";
    }
    out << "cones\n";
    for (const auto& c : fan.max_cones()) {
        for (std::size_t j = 0; j < c.ray_indices.size(); ++j)
            out << (j ? " " : "") << (c.ray_indices[j] + 1);
        out << "\n";
    }
    if (bundle) {
        out << "bundle\n";
        for (std::size_t j = 0; j < bundle->coeffs().size(); ++j)
            out << (j ? " " : "") << bundle->coeffs()[j];
        out << "\n";
    }
    return out.str();
}

}  // namespace toric
