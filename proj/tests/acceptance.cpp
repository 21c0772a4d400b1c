// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. All checks are exact; runtime budgets are in seconds.

#include "catalan/catalan.hpp"
#include "catalan/cli.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace catalan;

namespace {

struct criterion {
    int id;
    const char* title;
    double budget_seconds;
    std::function<bool(std::string&)> check;
};

std::vector<std::string> strings(const std::vector<catalan_sequence>& list) {
    std::vector<std::string> out;
    for (const auto& s : list) out.push_back(s.str());
    return out;
}

bool enumerate_three(std::string& why) {
    const std::vector<std::string> listed{"000111", "001011", "001101", "010011", "010101"};
    if (strings(enumerate(3)) != listed) {
        why = "enumerate(3) differs from the listed order";
        return false;
    }
    return true;
}

bool counting_agreement(std::string& why) {
    const auto series = catalan_series(301);
    for (std::size_t n = 0; n <= 300; ++n) {
        const big_int closed = catalan_closed(n);
        if (catalan_convolution(n) != closed || catalan_linear(n) != closed ||
            series.coefficients[n] != closed) {
            why = "methods disagree at n = " + std::to_string(n);
            return false;
        }
    }
    if (catalan_closed(0) != 1 || catalan_closed(3) != 5) {
        why = "C_0 or C_3 wrong";
        return false;
    }
    // C_10 from brute force over all 20-bit words.
    std::size_t count = 0;
    for (const auto& w : oracle::all_words(20)) count += oracle::is_catalan_word(w) ? 1 : 0;
    if (count != 16796 || catalan_closed(10) != count) {
        why = "C_10 = " + to_decimal(catalan_closed(10)) + ", brute force " + std::to_string(count);
        return false;
    }
    return true;
}

bool rpn_paper_example(std::string& why) {
    const catalan_sequence code = rpn_paper_encode(parse_rpn("aaa*a**"));
    if (code.str() != "00010111") {
        why = "encoded to " + code.str();
        return false;
    }
    const std::string back = render_rpn(rpn_paper_decode(code));
    if (back != "aaa*a**") {
        why = "decoded to " + back;
        return false;
    }
    return true;
}

bool decoding_coherence(std::string& why) {
    const catalan_sequence s = validate("00010111");
    const binary_tree tree = decode_tree(s);
    const chord_diagram chords = decode_chords(s);
    const extended_tree product = decode_expression(s);
    const grid_path path = decode_path(s);
    if (render_tree(tree) != "((. (. .)) (. .))" || node_count(tree) != 4) {
        why = "tree " + render_tree(tree);
        return false;
    }
    if (chords.str() != "1-8,2-7,3-4,5-6") {
        why = "chords " + chords.str();
        return false;
    }
    if (product.leaf_count() != 5 || strip_leaves(product) != tree) {
        why = "multiplication " + render_mult(product);
        return false;
    }
    if (path.str() != "HHHVHVVV") {
        why = "path " + path.str();
        return false;
    }
    if (encode_tree(tree) != s || encode_chords(chords) != s || encode_expression(product) != s ||
        encode_path(path) != s) {
        why = "some object does not re-encode to 00010111";
        return false;
    }
    return true;
}

bool exhaustive_bijections(std::string& why) {
    const std::vector<std::size_t> counts{1, 1, 2, 5, 14, 42, 132, 429};
    for (family f : all_families) {
        if (!is_total(f)) continue;
        for (std::size_t n = 0; n <= 7; ++n) {
            const auto list = enumerate(n);
            std::set<std::string> objects;
            for (const auto& s : list) {
                const std::string object = decode_family(f, s);
                if (encode_family(f, object) != s) {
                    why = std::string(family_name(f)) + ": " + s.str() + " does not round trip";
                    return false;
                }
                objects.insert(object);
            }
            if (list.size() != counts[n] || objects.size() != counts[n]) {
                why = std::string(family_name(f)) + ": wrong count at n = " + std::to_string(n);
                return false;
            }
        }
    }
    return true;
}

bool partial_image_count(std::string& why) {
    for (std::size_t n = 1; n <= 8; ++n) {
        std::size_t decodable = 0;
        for (const auto& s : enumerate(n)) {
            try {
                rpn_paper_decode(s);
                ++decodable;
            } catch (const not_in_image&) {
            }
        }
        if (decodable != catalan_closed(n - 1)) {
            why = "n = " + std::to_string(n) + ": " + std::to_string(decodable) + " decodable";
            return false;
        }
    }
    return true;
}

bool oracle_equivalence(std::string& why) {
    for (std::size_t n = 0; n <= 8; ++n) {
        std::vector<std::string> filtered;
        for (const auto& w : oracle::all_words(2 * n)) {
            try {
                filtered.push_back(validate(w).str());
            } catch (const sequence_error&) {
            }
        }
        const auto list = enumerate(n);
        if (strings(list) != filtered) {
            why = "enumerate(" + std::to_string(n) + ") differs from filtered words";
            return false;
        }
        for (std::size_t i = 0; i < list.size(); ++i) {
            if (rank(list[i]) != i || unrank(n, i) != list[i]) {
                why = "rank/unrank mismatch at n = " + std::to_string(n) + ", index " +
                      std::to_string(i);
                return false;
            }
        }
    }
    return true;
}

bool series_fixed_point(std::string& why) {
    const auto series = catalan_series(50);
    if (series.coefficients.size() != 50) {
        why = "wrong prefix length";
        return false;
    }
    for (std::size_t k = 0; k < 50; ++k) {
        if (series.coefficients[k] != catalan_closed(k)) {
            why = "coefficient " + std::to_string(k) + " differs";
            return false;
        }
    }
    return true;
}

bool cli_transcripts(std::string& why) {
    struct transcript {
        std::vector<std::string> args;
        int code;
        std::string out;
    };
    const std::vector<transcript> golden{
        {{"count", "--n", "3"}, 0, "5\n"},
        {{"decode", "--family", "rpn-paper", "00010111"}, 0, "aaa*a**\n"},
        {{"decode", "--family", "rpn-paper", "010011"}, 2, ""},
    };
    for (const auto& t : golden) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli_main(t.args, out, err);
        if (code != t.code || out.str() != t.out) {
            why = "'" + t.args.front() + "' gave exit " + std::to_string(code) + " and output '" +
                  out.str() + "'";
            return false;
        }
        if (t.code == 2 && err.str().find("domain error") == std::string::npos) {
            why = "missing domain error diagnostic";
            return false;
        }
    }
    return true;
}

} // namespace

int main() {
    const std::vector<criterion> criteria{
        {1, "enumerate(3) returns the five listed sequences in order", 0.010, enumerate_three},
        {2, "closed/convolution/linear/series agree for n <= 300", 1.0, counting_agreement},
        {3, "postfix append-1 example aaa*a** <-> 00010111", 1.0, rpn_paper_example},
        {4, "decoding 00010111 as tree, chords, product, path is coherent", 1.0, decoding_coherence},
        {5, "every total codec is a bijection for n <= 7", 10.0, exhaustive_bijections},
        {6, "postfix append-1 image has C_(n-1) members, 1 <= n <= 8", 1.0, partial_image_count},
        {7, "enumerate equals filtered words; rank/unrank inverse, n <= 8", 30.0, oracle_equivalence},
        {8, "first 50 series coefficients equal catalan_closed(0..49)", 1.0, series_fixed_point},
        {9, "CLI golden transcripts", 1.0, cli_transcripts},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        std::string why;
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.check(why);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && seconds > c.budget_seconds) {
            ok = false;
            why = "over budget (" + std::to_string(c.budget_seconds) + " s)";
        }
        std::printf("%s criterion %d: %s [%.4f s]%s%s\n", ok ? "PASS" : "FAIL", c.id, c.title,
                    seconds, why.empty() ? "" : " -- ", why.c_str());
        failures += ok ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
