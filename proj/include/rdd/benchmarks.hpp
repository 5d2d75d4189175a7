#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rdd/errors.hpp"
#include "rdd/parser.hpp"

namespace rdd {

enum class Task { LetterConcat, LengthReversal };

inline const char* to_string(Task t) {
    return t == Task::LetterConcat ? "letter_concat" : "length_reversal";
}

inline Task task_from_string(std::string_view s) {
    if (s == "letter_concat") return Task::LetterConcat;
    if (s == "length_reversal") return Task::LengthReversal;
    throw ConfigError("unknown task: " + std::string(s));
}

struct BenchmarkInstance {
    Task task = Task::LetterConcat;
    std::string class_tag;
    int difficulty = 0;            // list length
    std::vector<std::string> words;
    int index = 0;                 // LetterConcat only
    std::string description;
    std::string ground_truth;
    std::uint64_t seed = 0;
};

// Names from the packaged example listings plus a fixed supplementary list;
// all ASCII, all at least four characters so indices 0..3 are always valid.
inline const std::vector<std::string>& word_pool() {
    static const std::vector<std::string> pool = {
        "Gladys", "Rathav", "Miya", "Gloria", "Ricardo", "Kanwar", "Chon", "Manoj", "Enrique",
        "Xiong", "Shaw", "Olga", "Cynthia", "Aliyu", "Wilson", "Ilya", "Jacques", "Francesco",
        "Samuel", "Jadhav", "Rivera", "Irma", "Jianping", "Christian", "Dong", "Shimizu", "Hoang",
        "Muhammad", "Mejia", "Fernandes", "Punam", "Cesar", "Lawal", "Sekha", "Abraham", "Sushila",
        "Gerhard", "Heinz", "Kailash", "Ouattara", "Kasongo", "Perez", "Jyoti", "Guan", "Madina",
        "Herrera", "Christopher", "Sergey", "Karina", "Lucy", "Ortega", "Vera", "Mallik", "Weimin",
        "Kwon", "Zhan", "Tahir", "Chang", "Halyna", "Weidong", "Ochoa", "Dung", "George", "Nayak",
        "Jianming", "Paola", "Awad", "Nabil", "Garba", "Amal", "Mustapha", "Garcia", "Bello",
        "Otieno", "Rojas", "Andrew", "Mustafa", "Haji", "Philip", "Leticia", "Syed", "Blanca",
        "Mahendra", "Salim", "Ghulam", "Quan", "Yanhua", "Artyom", "Orlando", "Arif", "Keith",
        "Lyudmyla", "Amin", "Theresa", "Stefan", "Gilberto", "Samina", "Yoko", "Katarzyna",
        "Haiying", "Saraswati", "Bernadette", "Maung", "Lopez", "Pereira", "Shaikh", "Brown",
        "Ortiz", "Prem", "Ashraf", "Shobha", "Robin", "Mostafa", "Hadi", "Gutierrez", "Farooq",
        "Nicolas", "Alicia", "Sandra", "Xiaolin", "Valerie", "Cheng", "Jianwei", "Magdalena",
        "Raimundo", "Rosario", "Raju",
        // supplementary
        "Aisha", "Bruno", "Carmen", "Dmitri", "Elena", "Farid", "Gustavo", "Hiroshi", "Ingrid",
        "Javier", "Kofi", "Liang", "Marisol", "Nadia", "Omar", "Priya", "Qiang", "Rosa",
        "Santiago", "Tomas", "Ulrich", "Viktor", "Wanjiru", "Ximena", "Yusuf", "Zainab", "Anders",
        "Bogdan", "Chiara", "Darius", "Emeka", "Fatima", "Goran", "Hilda", "Ivana", "Jorge",
        "Katya", "Luana", "Marek", "Nikhil"};
    return pool;
}

namespace detail {

inline std::string join(std::span<const std::string> items, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += sep;
        out += items[i];
    }
    return out;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace detail

// --- problem text grammar ---------------------------------------------------
//
// The four problem shapes the benchmarks produce. Sub-problem shapes
// (LengthList, ReverseList) appear only inside dependency decompositions.

enum class ProblemKind { LetterConcat, LengthReversal, LengthList, ReverseList };

struct ParsedProblem {
    ProblemKind kind = ProblemKind::LetterConcat;
    std::vector<std::string> words;  // LetterConcat / LengthReversal / LengthList
    int index = 0;                   // LetterConcat
    std::vector<std::string> items;  // ReverseList
};

inline std::string render_letter_concat(std::span<const std::string> words, int index) {
    return "Concatenate using a space the characters at index " + std::to_string(index) +
           " of each word in the list [" + detail::join(words, ", ") +
           "]; indices start at zero.";
}

inline std::string render_length_reversal(std::span<const std::string> words) {
    return "Substitute each word in the list [" + detail::join(words, ", ") +
           "] with its length (number of characters), then reverse the order of the items in the "
           "resulting list; concatenate the resulting lengths using a space as a delimiter.";
}

inline std::string render_length_list(std::span<const std::string> words) {
    return "Create a list with the length (number of characters) of each word in the list [" +
           detail::join(words, ", ") + "]; concatenate the lengths using a space as a delimiter.";
}

inline std::string render_reverse_list(std::string_view items) {
    return "Reverse the order of the items in the following space-separated list: " +
           std::string(items);
}

inline const char* class_tag_of(ProblemKind k) {
    switch (k) {
        case ProblemKind::LetterConcat: return "letter_concat";
        case ProblemKind::LengthReversal: return "length_reversal";
        case ProblemKind::LengthList: return "length_list";
        case ProblemKind::ReverseList: return "reverse_list";
    }
    return "?";
}

namespace detail {

inline std::optional<std::vector<std::string>> bracket_list(std::string_view text) {
    auto open = text.find('[');
    auto close = text.rfind(']');
    if (open == std::string_view::npos || close == std::string_view::npos || close <= open)
        return std::nullopt;
    std::string_view inner = text.substr(open + 1, close - open - 1);
    std::vector<std::string> words;
    std::size_t pos = 0;
    while (pos <= inner.size()) {
        auto comma = inner.find(", ", pos);
        std::string_view w = comma == std::string_view::npos ? inner.substr(pos)
                                                             : inner.substr(pos, comma - pos);
        std::string word = trim(w);
        if (word.empty()) return std::nullopt;
        words.push_back(std::move(word));
        if (comma == std::string_view::npos) break;
        pos = comma + 2;
    }
    return words;
}

inline std::vector<std::string> split_ws(std::string_view text) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t b = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i > b) out.emplace_back(text.substr(b, i - b));
    }
    return out;
}

} // namespace detail

// Recognizes a benchmark problem description; nullopt when the text does not
// match any known shape (e.g. placeholder still present, missing data).
inline std::optional<ParsedProblem> parse_problem_text(std::string_view text) {
    std::string t = detail::trim(text);
    ParsedProblem p;
    if (t.starts_with("Concatenate using a space the characters at index ")) {
        p.kind = ProblemKind::LetterConcat;
        std::string_view rest = std::string_view(t).substr(50);
        std::size_t i = 0;
        while (i < rest.size() && std::isdigit(static_cast<unsigned char>(rest[i]))) ++i;
        if (i == 0) return std::nullopt;
        p.index = std::stoi(std::string(rest.substr(0, i)));
        auto words = detail::bracket_list(rest);
        if (!words) return std::nullopt;
        p.words = std::move(*words);
        for (const std::string& w : p.words)
            if (p.index >= static_cast<int>(w.size())) return std::nullopt;
        return p;
    }
    if (t.starts_with("Substitute each word in the list [")) {
        p.kind = ProblemKind::LengthReversal;
        auto words = detail::bracket_list(t);
        if (!words) return std::nullopt;
        p.words = std::move(*words);
        return p;
    }
    if (t.starts_with("Create a list with the length (number of characters) of each word in the "
                      "list [")) {
        p.kind = ProblemKind::LengthList;
        auto words = detail::bracket_list(t);
        if (!words) return std::nullopt;
        p.words = std::move(*words);
        return p;
    }
    constexpr std::string_view reverse_prefix =
        "Reverse the order of the items in the following space-separated list:";
    if (t.starts_with(reverse_prefix)) {
        p.kind = ProblemKind::ReverseList;
        p.items = detail::split_ws(std::string_view(t).substr(reverse_prefix.size()));
        if (p.items.empty()) return std::nullopt;  // missing-data failure shape
        return p;
    }
    return std::nullopt;
}

inline std::string ground_truth_of(const ParsedProblem& p) {
    std::vector<std::string> parts;
    switch (p.kind) {
        case ProblemKind::LetterConcat:
            for (const std::string& w : p.words) parts.emplace_back(1, w.at(p.index));
            break;
        case ProblemKind::LengthReversal:
            for (auto it = p.words.rbegin(); it != p.words.rend(); ++it)
                parts.push_back(std::to_string(it->size()));
            break;
        case ProblemKind::LengthList:
            for (const std::string& w : p.words) parts.push_back(std::to_string(w.size()));
            break;
        case ProblemKind::ReverseList:
            parts.assign(p.items.rbegin(), p.items.rend());
            break;
    }
    return detail::join(parts, " ");
}

// --- generation, solving, scoring -------------------------------------------

inline std::string solve_ground_truth(const BenchmarkInstance& inst) {
    ParsedProblem p;
    p.kind = inst.task == Task::LetterConcat ? ProblemKind::LetterConcat
                                             : ProblemKind::LengthReversal;
    p.words = inst.words;
    p.index = inst.index;
    return ground_truth_of(p);
}

inline std::vector<BenchmarkInstance> generate_instances(Task task, int n0, int count,
                                                         std::uint64_t seed) {
    if (n0 < 1) throw InvalidDifficultyError("difficulty must be >= 1, got " + std::to_string(n0));
    if (count < 1) throw InvalidDifficultyError("count must be >= 1");
    const auto& pool = word_pool();
    std::vector<BenchmarkInstance> out;
    out.reserve(static_cast<std::size_t>(count));
    std::uint64_t state = detail::splitmix64(seed ^ (static_cast<std::uint64_t>(n0) << 32) ^
                                             static_cast<std::uint64_t>(task));
    auto next = [&state] { return state = detail::splitmix64(state); };
    for (int i = 0; i < count; ++i) {
        BenchmarkInstance inst;
        inst.task = task;
        inst.class_tag = to_string(task);
        inst.difficulty = n0;
        inst.seed = next();
        std::size_t min_len = std::string::npos;
        for (int w = 0; w < n0; ++w) {
            const std::string& word = pool[next() % pool.size()];
            min_len = std::min(min_len, word.size());
            inst.words.push_back(word);
        }
        if (task == Task::LetterConcat) {
            int cap = std::min<std::size_t>(4, min_len);  // indices 0..3, capped by word length
            inst.index = static_cast<int>(next() % static_cast<std::uint64_t>(cap));
            inst.description = render_letter_concat(inst.words, inst.index);
        } else {
            inst.description = render_length_reversal(inst.words);
        }
        inst.ground_truth = solve_ground_truth(inst);
        out.push_back(std::move(inst));
    }
    return out;
}

// Trim, strip one layer of surrounding double quotes, collapse internal
// whitespace runs to single spaces.
inline std::string normalize_answer(std::string_view text) {
    std::string t = detail::trim(text);
    if (t.size() >= 2 && t.front() == '"' && t.back() == '"') t = t.substr(1, t.size() - 2);
    t = detail::trim(t);
    std::string out;
    out.reserve(t.size());
    bool in_ws = false;
    for (char c : t) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            in_ws = true;
            continue;
        }
        if (in_ws && !out.empty()) out += ' ';
        in_ws = false;
        out += c;
    }
    return out;
}

inline int score_answer(std::string_view predicted, const BenchmarkInstance& inst) {
    return normalize_answer(predicted) == normalize_answer(inst.ground_truth) ? 1 : 0;
}

// --- line-delimited instance records -----------------------------------------

inline nlohmann::json instance_to_json(const BenchmarkInstance& inst) {
    return nlohmann::json{{"task", to_string(inst.task)}, {"class", inst.class_tag},
                          {"n0", inst.difficulty},        {"words", inst.words},
                          {"index", inst.index},          {"description", inst.description},
                          {"ground_truth", inst.ground_truth},
                          {"seed", inst.seed}};
}

inline BenchmarkInstance instance_from_json(const nlohmann::json& j) {
    BenchmarkInstance inst;
    inst.task = task_from_string(j.at("task").get<std::string>());
    inst.class_tag = j.at("class").get<std::string>();
    inst.difficulty = j.at("n0").get<int>();
    inst.words = j.at("words").get<std::vector<std::string>>();
    inst.index = j.at("index").get<int>();
    inst.description = j.at("description").get<std::string>();
    inst.ground_truth = j.at("ground_truth").get<std::string>();
    inst.seed = j.at("seed").get<std::uint64_t>();
    return inst;
}

inline void write_instances_jsonl(const std::filesystem::path& path,
                                  std::span<const BenchmarkInstance> instances) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    for (const BenchmarkInstance& inst : instances) out << instance_to_json(inst).dump() << "\n";
}

inline std::vector<BenchmarkInstance> read_instances_jsonl(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    std::vector<BenchmarkInstance> out;
    std::string line;
    while (std::getline(in, line)) {
        if (detail::trim(line).empty()) continue;
        out.push_back(instance_from_json(nlohmann::json::parse(line)));
    }
    return out;
}

} // namespace rdd
