// Python bindings for the radical-structured stroke tree library. Stroke
// sequences cross the boundary as their digit spellings; trees, lexicons,
// and feature stores are first-class objects.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rsst/labelgen.hpp"
#include "rsst/lexicon.hpp"
#include "rsst/metric.hpp"
#include "rsst/simulate.hpp"
#include "rsst/translator.hpp"

namespace py = pybind11;

namespace {

rsst::StrokeSeq strokes_from_digits(const std::string& digits) {
    rsst::StrokeSeq out;
    out.reserve(digits.size());
    for (char c : digits) {
        auto code = rsst::stroke_code_from_char(c);
        if (!code) {
            throw rsst::SyntaxError(std::string("invalid stroke digit '") + c +
                                    "'");
        }
        out.push_back(rsst::StrokeSymbol{static_cast<std::uint8_t>(*code)});
    }
    return out;
}

std::string digits_from_strokes(const rsst::StrokeSeq& strokes) {
    std::string out;
    out.reserve(strokes.size());
    for (rsst::StrokeSymbol s : strokes) out += rsst::stroke_to_char(s);
    return out;
}

std::vector<std::string> token_strings(const std::vector<rsst::RadicalToken>& tokens) {
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (const rsst::RadicalToken& t : tokens) {
        out.push_back(rsst::radical_token_to_string(t));
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_rsst, m) {
    m.doc() =
        "Radical-structured stroke trees: parsing, weighted edit distances, "
        "lexicon rectification, translation, zero-shot splits, label "
        "generation, and a perturbation benchmark.";

    static py::exception<rsst::Error> rsst_error(m, "Error");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const rsst::Error& e) {
            py::set_error(rsst_error,
                          ("[" + e.code() + "] " + e.what()).c_str());
        }
    });

    py::class_<rsst::Tree>(m, "Tree")
        .def_static(
            "parse",
            [](const std::string& expr, int alphabet) {
                return rsst::parse_tree_expr(expr, alphabet);
            },
            py::arg("expr"), py::arg("alphabet") = rsst::kDefaultAlphabet,
            "Parse the whitespace-separated prefix form, e.g. '⿰ a:12 b:3'.")
        .def(
            "serialize",
            [](const rsst::Tree& t, bool include_radical_ids) {
                return rsst::serialize(t, include_radical_ids);
            },
            py::arg("include_radical_ids") = false)
        .def_property_readonly("leaf_count", &rsst::leaf_count)
        .def_property_readonly("depth", &rsst::depth)
        .def_property_readonly(
            "stroke_concat",
            [](const rsst::Tree& t) {
                return digits_from_strokes(rsst::leaf_stroke_concat(t));
            },
            "Concatenated leaf strokes in depth-first order, as digits.")
        .def("__eq__",
             [](const rsst::Tree& a, const rsst::Tree& b) { return a == b; })
        .def("__str__",
             [](const rsst::Tree& t) { return rsst::serialize(t, true); })
        .def("__repr__", [](const rsst::Tree& t) {
            return "Tree.parse('" + rsst::serialize(t, true) + "')";
        });

    py::class_<rsst::MetricParams>(m, "MetricParams")
        .def(py::init([](double alpha, double beta) {
                 rsst::MetricParams p{alpha, beta};
                 p.validate();
                 return p;
             }),
             py::arg("alpha") = 0.5, py::arg("beta") = 1.0)
        .def_readwrite("alpha", &rsst::MetricParams::alpha)
        .def_readwrite("beta", &rsst::MetricParams::beta)
        .def("__repr__", [](const rsst::MetricParams& p) {
            return "MetricParams(alpha=" + std::to_string(p.alpha) +
                   ", beta=" + std::to_string(p.beta) + ")";
        });

    m.def(
        "edit_distance",
        [](const std::string& a, const std::string& b) {
            rsst::StrokeSeq sa = strokes_from_digits(a);
            rsst::StrokeSeq sb = strokes_from_digits(b);
            return rsst::edit_distance(sa, sb);
        },
        py::arg("a"), py::arg("b"),
        "Plain edit distance between two stroke digit strings.");
    m.def("weighted_edit_distance",
          py::overload_cast<const rsst::Tree&, const rsst::Tree&,
                            const rsst::MetricParams&>(
              &rsst::weighted_edit_distance),
          py::arg("m"), py::arg("m_prime"),
          py::arg("params") = rsst::MetricParams{});
    m.def("stroke_distance", &rsst::stroke_distance, py::arg("m"),
          py::arg("m_prime"));
    m.def("combined_distance", &rsst::combined_distance, py::arg("m"),
          py::arg("m_prime"), py::arg("params") = rsst::MetricParams{});
    m.def("brute_force_wed", &rsst::brute_force_wed, py::arg("m"),
          py::arg("m_prime"), py::arg("params") = rsst::MetricParams{},
          "Exhaustive oracle for weighted_edit_distance (small trees only).");

    py::class_<rsst::Lexicon>(m, "Lexicon")
        .def_static("from_file", &rsst::Lexicon::from_file, py::arg("path"),
                    py::arg("alphabet") = rsst::kDefaultAlphabet)
        .def_static(
            "from_text",
            [](const std::string& text, int alphabet) {
                std::istringstream in(text);
                return rsst::Lexicon::from_stream(in, alphabet);
            },
            py::arg("text"), py::arg("alphabet") = rsst::kDefaultAlphabet,
            "Parse '<codepoint><TAB><tree-expression>' lines.")
        .def("__len__", &rsst::Lexicon::size)
        .def("to_text", &rsst::Lexicon::to_text)
        .def_property_readonly("codepoints",
                               [](const rsst::Lexicon& lex) {
                                   std::vector<std::string> out;
                                   out.reserve(lex.size());
                                   for (const auto& rec : lex.records()) {
                                       out.push_back(rec.codepoint);
                                   }
                                   return out;
                               })
        .def(
            "tree",
            [](const rsst::Lexicon& lex, const std::string& codepoint) {
                const rsst::LexiconRecord* rec = lex.find(codepoint);
                if (!rec) {
                    throw rsst::UnknownCodepointError("unknown codepoint '" +
                                                      codepoint + "'");
                }
                return rec->tree;
            },
            py::arg("codepoint"));

    m.def("confusable_set", &rsst::confusable_set, py::arg("lexicon"),
          "Groups of codepoints sharing one tree (radical ids ignored).");
    m.def("confusable_set_stroke_level", &rsst::confusable_set_stroke_level,
          py::arg("lexicon"),
          "Groups of codepoints sharing one stroke concatenation.");

    m.def(
        "char_zero_shot_split",
        [](const rsst::Lexicon& lex, int m_first, int n_last) {
            std::vector<std::string> alphabet;
            alphabet.reserve(lex.size());
            for (const auto& rec : lex.records()) {
                alphabet.push_back(rec.codepoint);
            }
            rsst::SplitResult split =
                rsst::char_zero_shot_split(lex, alphabet, m_first, n_last);
            return py::make_tuple(split.train, split.test);
        },
        py::arg("lexicon"), py::arg("m"), py::arg("n_last"),
        "(train, test): first m characters train, last n_last test.");
    m.def(
        "radical_zero_shot_split",
        [](const rsst::Lexicon& lex, int n) {
            rsst::SplitResult split = rsst::radical_zero_shot_split(lex, n);
            return py::make_tuple(split.train, split.test);
        },
        py::arg("lexicon"), py::arg("n"),
        "(train, test): characters holding a radical of frequency <= n test.");
    m.def("radical_frequency", &rsst::radical_frequency, py::arg("lexicon"),
          "Number of characters containing each radical id.");

    py::class_<rsst::FeatureStore>(m, "FeatureStore")
        .def(py::init<int>(), py::arg("dim"))
        .def_property_readonly("dim", &rsst::FeatureStore::dim)
        .def("add", &rsst::FeatureStore::add, py::arg("codepoint"),
             py::arg("vector"))
        .def("save_binary", &rsst::FeatureStore::save_binary, py::arg("path"))
        .def_static("load_binary", &rsst::FeatureStore::load_binary,
                    py::arg("path"))
        .def("to_json", &rsst::FeatureStore::to_json)
        .def_static("from_json", &rsst::FeatureStore::from_json,
                    py::arg("text"));

    m.def(
        "cosine_similarity",
        [](const std::vector<float>& f, const std::vector<float>& g) {
            return rsst::cosine_similarity(f, g);
        },
        py::arg("f"), py::arg("g"));

    py::class_<rsst::RectifyResult>(m, "RectifyResult")
        .def_readonly("rectified", &rsst::RectifyResult::rectified)
        .def_readonly("distance", &rsst::RectifyResult::distance)
        .def_readonly("candidates", &rsst::RectifyResult::candidates)
        .def_readonly("exact_match", &rsst::RectifyResult::exact_match)
        .def("__repr__", [](const rsst::RectifyResult& r) {
            return "RectifyResult(rectified='" + rsst::serialize(r.rectified) +
                   "', distance=" + std::to_string(r.distance) +
                   ", candidates=" + std::to_string(r.candidates.size()) +
                   ", exact_match=" + (r.exact_match ? "True" : "False") + ")";
        });

    m.def("rectify", &rsst::rectify, py::arg("query"), py::arg("lexicon"),
          py::arg("params") = rsst::MetricParams{},
          "Nearest lexicon tree under the combined distance.");
    m.def(
        "translate",
        [](const rsst::Tree& query, const rsst::Lexicon& lex,
           const rsst::MetricParams& params,
           const std::optional<std::vector<float>>& query_feature,
           const rsst::FeatureStore* store) {
            rsst::TranslateResult res =
                rsst::translate(query, lex, params, query_feature, store);
            return py::make_tuple(res.codepoint, res.rectification);
        },
        py::arg("query"), py::arg("lexicon"),
        py::arg("params") = rsst::MetricParams{},
        py::arg("query_feature") = py::none(),
        py::arg("store") = py::none(),
        "(codepoint, rectification): rectify, then resolve confusables by "
        "maximum support-sample cosine similarity.");

    m.def(
        "radical_tokens",
        [](const rsst::Tree& tree, bool explicit_radicals) {
            const auto mode = explicit_radicals
                                  ? rsst::RadicalLabelMode::explicit_radical
                                  : rsst::RadicalLabelMode::implicit_order;
            return token_strings(rsst::radical_sequence(tree, mode));
        },
        py::arg("tree"), py::arg("explicit_radicals") = false,
        "Depth-first radical-level label tokens.");
    m.def(
        "stroke_targets",
        [](const rsst::Tree& tree) {
            std::vector<std::string> out;
            for (const rsst::StrokeSeq& t : rsst::stroke_targets(tree)) {
                out.push_back(digits_from_strokes(t));
            }
            return out;
        },
        py::arg("tree"),
        "Per-node stroke targets: each node's subtree leaf concatenation.");
    m.def(
        "shifted_pair",
        [](const std::vector<std::string>& tokens, const std::string& bos,
           const std::string& eos) {
            auto [input, target] = rsst::shifted_pair(
                std::span<const std::string>(tokens), bos, eos);
            return py::make_tuple(input, target);
        },
        py::arg("tokens"), py::arg("bos"), py::arg("eos"),
        "(input, target) = ([bos] + tokens, tokens + [eos]).");

    py::class_<rsst::PerturbationConfig>(m, "PerturbationConfig")
        .def(py::init([](double p_sub, double p_del, double p_ins,
                         double p_struct, std::uint64_t seed, int alphabet) {
                 rsst::PerturbationConfig cfg{p_sub,    p_del, p_ins,
                                              p_struct, seed,  alphabet};
                 cfg.validate();
                 return cfg;
             }),
             py::arg("p_sub") = 0.0, py::arg("p_del") = 0.0,
             py::arg("p_ins") = 0.0, py::arg("p_struct") = 0.0,
             py::arg("seed") = 0,
             py::arg("alphabet") = rsst::kDefaultAlphabet)
        .def_readwrite("p_sub", &rsst::PerturbationConfig::p_sub)
        .def_readwrite("p_del", &rsst::PerturbationConfig::p_del)
        .def_readwrite("p_ins", &rsst::PerturbationConfig::p_ins)
        .def_readwrite("p_struct", &rsst::PerturbationConfig::p_struct)
        .def_readwrite("seed", &rsst::PerturbationConfig::seed)
        .def_readwrite("alphabet", &rsst::PerturbationConfig::alphabet);

    m.def("perturb", &rsst::perturb, py::arg("tree"), py::arg("config"),
          py::arg("trial_index"),
          "Deterministic corruption of one tree for a given trial index.");
    m.def("synth_lexicon", &rsst::synth_lexicon, py::arg("count"),
          py::arg("seed"), py::arg("max_depth") = 3,
          py::arg("alphabet") = rsst::kDefaultAlphabet,
          "Deterministic random lexicon with tree- and stroke-level "
          "confusables.");

    py::class_<rsst::EvalReport>(m, "EvalReport")
        .def_readonly("trials", &rsst::EvalReport::trials)
        .def_readonly("top1_combined", &rsst::EvalReport::top1_combined)
        .def_readonly("top1_tree_only", &rsst::EvalReport::top1_tree_only)
        .def_readonly("top1_stroke_only", &rsst::EvalReport::top1_stroke_only)
        .def_readonly("exact_match_rate", &rsst::EvalReport::exact_match_rate)
        .def_readonly("mean_distance", &rsst::EvalReport::mean_distance)
        .def("to_json", &rsst::EvalReport::to_json)
        .def_static("from_json", &rsst::EvalReport::from_json, py::arg("text"));

    m.def("evaluate", &rsst::evaluate, py::arg("lexicon"), py::arg("config"),
          py::arg("trials"), py::arg("params") = rsst::MetricParams{},
          py::arg("threads") = 1,
          py::call_guard<py::gil_scoped_release>(),
          "Perturbation benchmark: top-1 recovery under the combined metric "
          "and both single-metric ablations.");

    m.attr("DEFAULT_ALPHABET") = rsst::kDefaultAlphabet;
    m.attr("MAX_ALPHABET") = rsst::kMaxAlphabet;
    m.attr("STRUCTURE_OP_COUNT") = rsst::kStructureOpCount;
}
