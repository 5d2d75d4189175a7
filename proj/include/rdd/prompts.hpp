#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "rdd/errors.hpp"
#include "rdd/parser.hpp"
#include "rdd/prompt_assets.hpp"

namespace rdd {

enum class MetaTask { Decompose, DecomposeWithDeps, Merge, UnitCoT, UnitLtM, Vote };
enum class ExampleRegime { TaskSpecific, Generic };
enum class UnitMethod { CoT, LtM };

inline const char* to_string(MetaTask t) {
    switch (t) {
        case MetaTask::Decompose: return "decompose";
        case MetaTask::DecomposeWithDeps: return "decompose_with_deps";
        case MetaTask::Merge: return "merge";
        case MetaTask::UnitCoT: return "unit_cot";
        case MetaTask::UnitLtM: return "unit_ltm";
        case MetaTask::Vote: return "vote";
    }
    return "?";
}

inline const char* to_string(ExampleRegime r) {
    return r == ExampleRegime::TaskSpecific ? "task_specific" : "generic";
}

struct PromptTemplate {
    MetaTask meta_task = MetaTask::Decompose;
    std::string body;
};

struct Shot {
    std::string input;
    std::string target;
    bool operator==(const Shot&) const = default;
};

struct ExampleSet {
    std::string name;
    ExampleRegime regime = ExampleRegime::Generic;
    std::vector<Shot> shots;
    bool operator==(const ExampleSet&) const = default;
};

struct SubSolution {
    std::string description;
    std::string solution;
};

namespace detail {

inline std::string strip_leading_newline(std::string_view s) {
    if (!s.empty() && s.front() == '\n') s.remove_prefix(1);
    return std::string(s);
}

inline bool body_has(std::string_view body, std::string_view placeholder) {
    return body.find(placeholder) != std::string_view::npos;
}

} // namespace detail

// Shots serialized the way the packaged listings frame them.
inline std::string render_examples(const ExampleSet& set) {
    std::string out;
    for (std::size_t i = 0; i < set.shots.size(); ++i) {
        if (i) out += "\n\n";
        out += "<INPUT>" + set.shots[i].input + "</INPUT>\n<TARGET>" + set.shots[i].target +
               "</TARGET>";
    }
    return out;
}

inline std::string render_subsolutions(const std::vector<SubSolution>& subs) {
    std::string out;
    for (std::size_t i = 0; i < subs.size(); ++i) {
        if (i) out += "\n";
        std::string k = std::to_string(i + 1);
        out += "- Sub-problem " + k + ": " + subs[i].description + " Sub-solution " + k + ": " +
               subs[i].solution;
    }
    return out;
}

// Renders one prompt. Placeholder occurrences are substituted in a single
// left-to-right pass; substituted values are never rescanned.
inline std::string render(const PromptTemplate& tpl, const ExampleSet& examples,
                          const std::string& problem, int width,
                          const std::optional<std::vector<SubSolution>>& subsolutions = std::nullopt) {
    const bool needs_subs = tpl.meta_task == MetaTask::Merge;
    if (needs_subs && !subsolutions)
        throw MissingPlaceholderValueError("merge template requires subsolutions");
    if (!needs_subs && subsolutions)
        throw ExtraSubsolutionsError(std::string("template '") + to_string(tpl.meta_task) +
                                     "' does not accept subsolutions");
    if (detail::body_has(tpl.body, "{width}") && width < 1)
        throw MissingPlaceholderValueError("template requires a positive width");

    std::string examples_text = render_examples(examples);
    std::string subs_text = subsolutions ? render_subsolutions(*subsolutions) : std::string();
    std::string width_text = std::to_string(width);

    std::string out;
    out.reserve(tpl.body.size() + examples_text.size() + problem.size() + subs_text.size());
    std::size_t pos = 0;
    while (pos < tpl.body.size()) {
        auto open = tpl.body.find('{', pos);
        if (open == std::string::npos) {
            out.append(tpl.body, pos, std::string::npos);
            break;
        }
        out.append(tpl.body, pos, open - pos);
        std::string_view rest = std::string_view(tpl.body).substr(open);
        const std::string* value = nullptr;
        std::size_t skip = 0;
        if (rest.starts_with("{width}")) {
            value = &width_text;
            skip = 7;
        } else if (rest.starts_with("{examples}")) {
            value = &examples_text;
            skip = 10;
        } else if (rest.starts_with("{problem}")) {
            value = &problem;
            skip = 9;
        } else if (rest.starts_with("{subsolutions}")) {
            value = &subs_text;
            skip = 14;
        }
        if (value) {
            out += *value;
            pos = open + skip;
        } else {
            out += '{';
            pos = open + 1;
        }
    }
    return out;
}

// Loaded prompt assets: all templates plus the packaged example sets.
struct PromptAssets {
    std::string version;
    std::map<MetaTask, PromptTemplate> templates;
    std::map<std::string, ExampleSet> example_sets;

    const PromptTemplate& tpl(MetaTask t) const {
        auto it = templates.find(t);
        if (it == templates.end())
            throw AssetCorruptError(std::string("missing template: ") + to_string(t));
        return it->second;
    }

    const ExampleSet& set(const std::string& name) const {
        auto it = example_sets.find(name);
        if (it == example_sets.end()) throw AssetCorruptError("missing example set: " + name);
        return it->second;
    }
};

namespace detail {

struct SetManifestEntry {
    const char* name;
    ExampleRegime regime;
    const assets::RawShot* shots;
    std::size_t count;
    std::size_t expected_count;  // validated on every load
};

inline const std::vector<SetManifestEntry>& set_manifest() {
    static const std::vector<SetManifestEntry> entries = {
        {"letter_concat_cot", ExampleRegime::TaskSpecific, assets::kLetterConcatCot,
         std::size(assets::kLetterConcatCot), 5},
        {"letter_concat_ltm", ExampleRegime::TaskSpecific, assets::kLetterConcatLtm,
         std::size(assets::kLetterConcatLtm), 5},
        {"generic_cot", ExampleRegime::Generic, assets::kGenericCot,
         std::size(assets::kGenericCot), 5},
        {"letter_concat_decompose", ExampleRegime::TaskSpecific, assets::kLetterConcatDecompose,
         std::size(assets::kLetterConcatDecompose), 5},
        {"generic_decompose", ExampleRegime::Generic, assets::kGenericDecompose,
         std::size(assets::kGenericDecompose), 8},
        {"generic_decompose_deps", ExampleRegime::Generic, assets::kGenericDecomposeDeps,
         std::size(assets::kGenericDecomposeDeps), 8},
        {"letter_concat_merge", ExampleRegime::TaskSpecific, assets::kLetterConcatMerge,
         std::size(assets::kLetterConcatMerge), 5},
        {"generic_merge", ExampleRegime::Generic, assets::kGenericMerge,
         std::size(assets::kGenericMerge), 5},
        {"vote", ExampleRegime::Generic, nullptr, 0, 0},
    };
    return entries;
}

inline void validate_template(const PromptTemplate& tpl) {
    static constexpr std::string_view names[] = {"{width}", "{examples}", "{problem}",
                                                 "{subsolutions}"};
    // Every brace-delimited token must be one of the four placeholder names;
    // "{P-..." style literals are allowed only inside example text, not bodies.
    std::size_t pos = 0;
    while ((pos = tpl.body.find('{', pos)) != std::string::npos) {
        bool known = false;
        for (auto n : names)
            if (std::string_view(tpl.body).substr(pos, n.size()) == n) known = true;
        if (!known)
            throw AssetCorruptError(std::string("unknown placeholder in template ") +
                                    to_string(tpl.meta_task));
        ++pos;
    }
    switch (tpl.meta_task) {
        case MetaTask::Decompose:
        case MetaTask::DecomposeWithDeps:
            if (!body_has(tpl.body, "{width}"))
                throw AssetCorruptError("decompose template lacks {width}");
            break;
        case MetaTask::Merge:
            if (!body_has(tpl.body, "{subsolutions}"))
                throw AssetCorruptError("merge template lacks {subsolutions}");
            break;
        default:
            break;
    }
    if (!body_has(tpl.body, "{problem}"))
        throw AssetCorruptError(std::string("template lacks {problem}: ") +
                                to_string(tpl.meta_task));
}

} // namespace detail

inline void validate_assets(const PromptAssets& a) {
    for (MetaTask t : {MetaTask::Decompose, MetaTask::DecomposeWithDeps, MetaTask::Merge,
                       MetaTask::UnitCoT, MetaTask::UnitLtM, MetaTask::Vote})
        detail::validate_template(a.tpl(t));
    for (const auto& entry : detail::set_manifest()) {
        const ExampleSet& s = a.set(entry.name);
        if (s.shots.size() != entry.expected_count)
            throw AssetCorruptError("example set '" + s.name + "' has " +
                                    std::to_string(s.shots.size()) + " shots, expected " +
                                    std::to_string(entry.expected_count));
        for (const Shot& shot : s.shots)
            if (shot.target.empty())
                throw AssetCorruptError("example set '" + s.name + "' has an empty target");
    }
}

inline PromptAssets load_packaged_assets() {
    PromptAssets a;
    a.version = std::string(assets::kVersion);
    auto add_tpl = [&a](MetaTask t, std::string_view body) {
        a.templates[t] = PromptTemplate{t, detail::strip_leading_newline(body)};
    };
    add_tpl(MetaTask::Decompose, assets::kTemplateDecompose);
    add_tpl(MetaTask::DecomposeWithDeps, assets::kTemplateDecomposeWithDeps);
    add_tpl(MetaTask::Merge, assets::kTemplateMerge);
    add_tpl(MetaTask::UnitCoT, assets::kTemplateUnitCot);
    add_tpl(MetaTask::UnitLtM, assets::kTemplateUnitLtm);
    add_tpl(MetaTask::Vote, assets::kTemplateVote);

    for (const auto& entry : detail::set_manifest()) {
        ExampleSet set;
        set.name = entry.name;
        set.regime = entry.regime;
        for (std::size_t i = 0; i < entry.count; ++i)
            set.shots.push_back(Shot{detail::strip_leading_newline(entry.shots[i].input),
                                     detail::strip_leading_newline(entry.shots[i].target)});
        a.example_sets[set.name] = std::move(set);
    }
    validate_assets(a);
    return a;
}

// --- asset directory round trip ------------------------------------------

namespace detail {

inline std::string template_filename(MetaTask t) { return std::string(to_string(t)) + ".txt"; }

inline std::string serialize_shots(const ExampleSet& set) {
    std::string out;
    for (const Shot& s : set.shots)
        out += "<INPUT>" + s.input + "</INPUT>\n<TARGET>" + s.target + "</TARGET>\n\n";
    return out;
}

inline std::vector<Shot> parse_shots(const std::string& text, const std::string& origin) {
    std::vector<Shot> shots;
    std::size_t pos = 0;
    while (true) {
        auto in_open = text.find("<INPUT>", pos);
        if (in_open == std::string::npos) break;
        auto in_close = text.find("</INPUT>", in_open);
        auto tg_open = text.find("<TARGET>", in_open);
        auto tg_close = text.find("</TARGET>", in_open);
        if (in_close == std::string::npos || tg_open == std::string::npos ||
            tg_close == std::string::npos || !(in_close < tg_open && tg_open < tg_close))
            throw AssetCorruptError("malformed shot framing in " + origin);
        shots.push_back(Shot{text.substr(in_open + 7, in_close - in_open - 7),
                             text.substr(tg_open + 8, tg_close - tg_open - 8)});
        pos = tg_close + 9;
    }
    return shots;
}

inline std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw AssetCorruptError("cannot read asset file " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::filesystem::path& p, std::string_view content) {
    std::ofstream out(p, std::ios::binary);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
}

} // namespace detail

inline void write_assets_dir(const PromptAssets& a, const std::filesystem::path& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir / "templates");
    fs::create_directories(dir / "examples");
    detail::write_file(dir / "VERSION", a.version + "\n");
    for (const auto& [task, tpl] : a.templates)
        detail::write_file(dir / "templates" / detail::template_filename(task), tpl.body);
    for (const auto& [name, set] : a.example_sets)
        detail::write_file(dir / "examples" / (name + ".txt"), detail::serialize_shots(set));
}

// Loads a custom asset directory laid out like write_assets_dir's output.
// Topology (set names, regimes, shot counts) follows the packaged manifest;
// only the text content may vary.
inline PromptAssets load_assets_from_dir(const std::filesystem::path& dir) {
    PromptAssets a;
    std::string version = detail::read_file(dir / "VERSION");
    a.version = rdd::detail::trim(version);
    for (MetaTask t : {MetaTask::Decompose, MetaTask::DecomposeWithDeps, MetaTask::Merge,
                       MetaTask::UnitCoT, MetaTask::UnitLtM, MetaTask::Vote})
        a.templates[t] =
            PromptTemplate{t, detail::read_file(dir / "templates" / detail::template_filename(t))};
    for (const auto& entry : detail::set_manifest()) {
        ExampleSet set;
        set.name = entry.name;
        set.regime = entry.regime;
        auto file = dir / "examples" / (set.name + std::string(".txt"));
        set.shots = detail::parse_shots(detail::read_file(file), file.string());
        a.example_sets[set.name] = std::move(set);
    }
    validate_assets(a);
    return a;
}

// --- meta-task detection and suite selection ------------------------------

enum class PromptKind { Decompose, Merge, Unit, Vote };

// Which meta-task a rendered prompt belongs to, recognized from the fixed
// template wording. Used by the scripted backends.
inline PromptKind classify_prompt(std::string_view prompt) {
    if (prompt.find("Your task is to decompose the problem below") != std::string_view::npos)
        return PromptKind::Decompose;
    if (prompt.find("was decomposed into sub-problems") != std::string_view::npos)
        return PromptKind::Merge;
    if (prompt.find("candidate answers are listed after the problem statement") !=
        std::string_view::npos)
        return PromptKind::Vote;
    return PromptKind::Unit;
}

inline bool is_dependency_prompt(std::string_view prompt) {
    return prompt.find("unique identifier given between square brackets") !=
           std::string_view::npos;
}

// Template + example set bundle resolved for one scheduler configuration.
struct PromptSuite {
    PromptTemplate decompose;
    ExampleSet decompose_examples;
    PromptTemplate merge;
    ExampleSet merge_examples;
    PromptTemplate unit;
    ExampleSet unit_examples;
    PromptTemplate vote;
    ExampleSet vote_examples;
};

inline PromptSuite make_suite(const PromptAssets& a, DecompositionMode mode, ExampleRegime regime,
                              UnitMethod unit_method) {
    PromptSuite s;
    if (mode == DecompositionMode::WithDependencies) {
        if (regime == ExampleRegime::TaskSpecific)
            throw ConfigError("no task-specific example set is packaged for dependency "
                              "decomposition; use the generic regime");
        s.decompose = a.tpl(MetaTask::DecomposeWithDeps);
        s.decompose_examples = a.set("generic_decompose_deps");
    } else {
        s.decompose = a.tpl(MetaTask::Decompose);
        s.decompose_examples = a.set(regime == ExampleRegime::TaskSpecific
                                         ? "letter_concat_decompose"
                                         : "generic_decompose");
    }
    s.merge = a.tpl(MetaTask::Merge);
    s.merge_examples =
        a.set(regime == ExampleRegime::TaskSpecific ? "letter_concat_merge" : "generic_merge");
    if (unit_method == UnitMethod::LtM) {
        if (regime == ExampleRegime::Generic)
            throw ConfigError("no generic example set is packaged for the incremental unit "
                              "method; use CoT or the task-specific regime");
        s.unit = a.tpl(MetaTask::UnitLtM);
        s.unit_examples = a.set("letter_concat_ltm");
    } else {
        s.unit = a.tpl(MetaTask::UnitCoT);
        s.unit_examples =
            a.set(regime == ExampleRegime::TaskSpecific ? "letter_concat_cot" : "generic_cot");
    }
    s.vote = a.tpl(MetaTask::Vote);
    s.vote_examples = a.set("vote");
    return s;
}

// Drops the error-recovery sentence from a merge template body.
inline PromptTemplate without_recovery_sentence(PromptTemplate tpl) {
    const std::string sentence(assets::kRecoverySentence);
    auto pos = tpl.body.find(sentence);
    if (pos != std::string::npos) {
        std::size_t begin = pos, len = sentence.size();
        if (begin > 0 && tpl.body[begin - 1] == ' ') {
            --begin;
            ++len;
        }
        tpl.body.erase(begin, len);
    }
    return tpl;
}

} // namespace rdd
