#include "script.hpp"

#include <charconv>
#include <sstream>

namespace ephem::cli {
namespace {

template <typename T>
bool parse_number(std::string_view s, T& out) {
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, out);
    return ec == std::errc{} && ptr == end;
}

std::string_view next_field(std::string_view& rest) {
    const auto start = rest.find_first_not_of(" \t");
    if (start == std::string_view::npos) {
        rest = {};
        return {};
    }
    rest.remove_prefix(start);
    const auto stop = std::min(rest.find_first_of(" \t"), rest.size());
    const auto field = rest.substr(0, stop);
    rest.remove_prefix(stop);
    return field;
}

}  // namespace

std::vector<ScriptLine> parse_script(std::istream& in, bool tokens) {
    std::vector<ScriptLine> out;
    std::string raw;
    for (Index line_no = 1; std::getline(in, raw); ++line_no) {
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        std::string_view rest = raw;
        auto fail = [&](const std::string& why) {
            throw ScriptError("line " + std::to_string(line_no) + ": " + why + ": '" + raw + "'");
        };
        const auto kind = next_field(rest);
        if (kind.empty() || kind.front() == '#') continue;
        if (kind.size() != 1 || std::string_view("IDX").find(kind[0]) == std::string_view::npos) {
            fail("expected I, D or X");
        }

        Index first = 0;
        if (!parse_number(next_field(rest), first)) fail("bad position");
        if (kind[0] == 'D') {
            Index second = 0;
            if (!parse_number(next_field(rest), second)) fail("bad position");
            if (!next_field(rest).empty()) fail("trailing input");
            out.push_back({line_no, EditOp::erase(first, second)});
            continue;
        }

        std::vector<Letter> block;
        if (tokens) {
            const auto list = next_field(rest);
            if (!next_field(rest).empty()) fail("trailing input");
            for (std::size_t from = 0;;) {
                const auto comma = list.find(',', from);
                Letter c = 0;
                if (!parse_number(list.substr(from, comma == std::string_view::npos ? comma : comma - from), c)) fail("bad letter list");
                block.push_back(c);
                if (comma == std::string_view::npos) break;
                from = comma + 1;
            }
        } else {
            // exactly one separator, then the literal block
            if (rest.empty() || (rest.front() != ' ' && rest.front() != '\t')) fail("missing block");
            rest.remove_prefix(1);
            for (char c : rest) block.push_back(static_cast<unsigned char>(c));
        }
        if (block.empty()) fail("empty block");
        out.push_back({line_no, kind[0] == 'I' ? EditOp::insert(first, std::move(block))
                                               : EditOp::substitute(first, std::move(block))});
    }
    return out;
}

std::vector<Letter> parse_tokens(std::istream& in, const std::string& what) {
    std::vector<Letter> out;
    std::string word;
    while (in >> word) {
        Letter c = 0;
        if (!parse_number(std::string_view(word), c)) {
            throw ScriptError(what + ": token " + std::to_string(out.size()) + " ('" + word +
                              "') is not a non-negative integer");
        }
        out.push_back(c);
    }
    return out;
}

}  // namespace ephem::cli
