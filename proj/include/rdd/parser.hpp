#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "rdd/errors.hpp"
#include "rdd/graph.hpp"

namespace rdd {

enum class DecompositionMode { Independent, WithDependencies };

struct ParsedSub {
    std::optional<std::string> id;  // local id, present in dependency mode
    std::string description;
    std::set<std::string> dep_refs;  // local ids referenced via "{P-k}"
};

struct DecompositionResult {
    bool unit_problem = false;
    std::vector<ParsedSub> subs;
    std::string raw;
};

struct ExtractedAnswer {
    std::string text;
    bool malformed_tags = false;  // an opening tag without a matching close
};

namespace detail {

constexpr std::string_view kAnswerOpen = "<ANSWER>";
constexpr std::string_view kAnswerClose = "</ANSWER>";
constexpr std::string_view kUnitSentence = "this is a unit problem";

inline std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

inline std::string to_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

// Region between the last well-formed <ANSWER>...</ANSWER> pair, if any.
inline std::optional<std::string> last_answer_region(std::string_view text) {
    auto close = text.rfind(kAnswerClose);
    if (close == std::string_view::npos) return std::nullopt;
    auto open = text.rfind(kAnswerOpen, close);
    if (open == std::string_view::npos) return std::nullopt;
    auto begin = open + kAnswerOpen.size();
    return std::string(text.substr(begin, close - begin));
}

inline bool has_unclosed_answer_tag(std::string_view text) {
    std::size_t pos = 0;
    while ((pos = text.find(kAnswerOpen, pos)) != std::string_view::npos) {
        auto close = text.find(kAnswerClose, pos + kAnswerOpen.size());
        if (close == std::string_view::npos) return true;
        pos = close + kAnswerClose.size();
    }
    return false;
}

// Bullet markers accepted at line start: "-", "*", "•" followed by a space.
inline std::optional<std::string> bullet_content(std::string_view line) {
    std::size_t i = 0;
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::string_view rest = line.substr(i);
    for (std::string_view marker : {std::string_view("- "), std::string_view("* "),
                                    std::string_view("\xE2\x80\xA2 ")}) {
        if (rest.substr(0, marker.size()) == marker)
            return trim(rest.substr(marker.size()));
    }
    return std::nullopt;
}

inline std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            lines.emplace_back(text.substr(start));
            break;
        }
        lines.emplace_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    return lines;
}

} // namespace detail

// All well-formed "{P-k}" placeholders occurring in `text`.
inline std::set<std::string> find_placeholders(std::string_view text) {
    std::set<std::string> refs;
    std::size_t pos = 0;
    while ((pos = text.find("{P-", pos)) != std::string_view::npos) {
        std::size_t end = text.find('}', pos);
        if (end == std::string_view::npos) break;
        std::string_view inner = text.substr(pos + 1, end - pos - 1);
        if (is_valid_local_id(inner)) {
            refs.emplace(inner);
            pos = end + 1;
        } else {
            pos += 3;
        }
    }
    return refs;
}

// Extracts the content of the LAST well-formed <ANSWER>...</ANSWER> pair,
// trimmed and with one layer of surrounding double quotes removed. Without
// tags the whole completion is returned trimmed. Never throws.
inline ExtractedAnswer extract_answer(std::string_view completion) {
    ExtractedAnswer out;
    out.malformed_tags = detail::has_unclosed_answer_tag(completion);
    if (auto region = detail::last_answer_region(completion)) {
        std::string t = detail::trim(*region);
        if (t.size() >= 2 && t.front() == '"' && t.back() == '"')
            t = t.substr(1, t.size() - 2);
        out.text = std::move(t);
    } else {
        out.text = detail::trim(completion);
    }
    return out;
}

// Parses a decomposition completion: either the unit-problem declaration or a
// bullet list of sub-problems. When the completion carries <ANSWER> tags, the
// tagged region is the answer region; otherwise the whole completion is.
inline DecompositionResult parse_decomposition(const std::string& completion,
                                               DecompositionMode mode, int width_limit) {
    DecompositionResult result;
    result.raw = completion;

    std::string region = detail::last_answer_region(completion).value_or(completion);
    if (detail::to_lower(region).find(detail::kUnitSentence) != std::string::npos) {
        result.unit_problem = true;
        return result;
    }

    for (const std::string& line : detail::split_lines(region)) {
        auto content = detail::bullet_content(line);
        if (!content || content->empty()) continue;
        ParsedSub sub;
        std::string body = *content;
        if (mode == DecompositionMode::WithDependencies) {
            if (body.front() != '[')
                throw MissingIdError("sub-problem bullet without a leading [P-k] identifier: " +
                                     body);
            auto close = body.find(']');
            if (close == std::string::npos)
                throw MissingIdError("unterminated identifier bracket: " + body);
            std::string local = detail::trim(std::string_view(body).substr(1, close - 1));
            if (!is_valid_local_id(local))
                throw MissingIdError("malformed sub-problem identifier '" + local + "'");
            sub.id = local;
            body = detail::trim(std::string_view(body).substr(close + 1));
        }
        if (body.empty())
            throw MalformedDecompositionError("empty sub-problem description");
        sub.description = body;
        sub.dep_refs = find_placeholders(body);
        result.subs.push_back(std::move(sub));
    }

    if (result.subs.empty())
        throw MalformedDecompositionError("no unit declaration and no bullet items");
    if (width_limit >= 1 && static_cast<int>(result.subs.size()) > width_limit)
        throw WidthExceededError("decomposition proposes " + std::to_string(result.subs.size()) +
                                 " sub-problems, width limit " + std::to_string(width_limit));

    std::set<std::string> ids;
    for (const ParsedSub& sub : result.subs)
        if (sub.id) ids.insert(*sub.id);
    for (const ParsedSub& sub : result.subs) {
        for (const std::string& ref : sub.dep_refs) {
            if (!ids.count(ref))
                throw DanglingDependencyError("dependency reference {" + ref +
                                              "} does not match any listed sub-problem");
        }
    }
    return result;
}

// Replaces each "{P-k}" placeholder with the recorded solution, verbatim.
// Inserted solution text is not rescanned, so the operation is idempotent
// once no placeholders remain.
inline std::string substitute_dependencies(const std::string& description,
                                           const std::map<std::string, std::string>& solutions) {
    std::string out;
    out.reserve(description.size());
    std::size_t pos = 0;
    while (pos < description.size()) {
        auto open = description.find("{P-", pos);
        if (open == std::string::npos) {
            out.append(description, pos, std::string::npos);
            break;
        }
        auto close = description.find('}', open);
        std::string inner =
            close == std::string::npos ? "" : description.substr(open + 1, close - open - 1);
        if (close == std::string::npos || !is_valid_local_id(inner)) {
            out.append(description, pos, open + 3 - pos);
            pos = open + 3;
            continue;
        }
        out.append(description, pos, open - pos);
        auto it = solutions.find(inner);
        if (it == solutions.end())
            throw UnresolvedDependencyError("no solution recorded for placeholder {" + inner +
                                            "}");
        out += it->second;
        pos = close + 1;
    }
    return out;
}

} // namespace rdd
