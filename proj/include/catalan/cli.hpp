#pragma once

#include "catalan/counting.hpp"
#include "catalan/error.hpp"
#include "catalan/hub.hpp"
#include "catalan/sequence.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace catalan {

enum exit_code : int { exit_ok = 0, exit_bad_input = 1, exit_domain = 2 };

namespace detail {

inline big_int parse_decimal(const std::string& text) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
        throw range_error("not a nonnegative decimal integer: '" + text + "'");
    }
    return big_int(text);
}

inline family family_arg(const std::string& name) {
    if (auto f = parse_family(name)) return *f;
    throw range_error("unknown family '" + name + "'");
}

} // namespace detail

// Command-line driver. `args` excludes the program name. Results go to
// `out`, diagnostics to `err`. Returns 0 on success, 1 for malformed input,
// 2 when a valid sequence lies outside a partial codec's image.
inline int cli_main(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Catalan sequence codecs: count, enumerate, encode, decode and transcode "
                 "Catalan-counted objects",
                 "catalan"};
    app.require_subcommand(1);

    std::size_t n = 0;
    std::string method = "closed";
    std::string bits;
    std::string family_text;
    std::string to_text;
    std::string input;
    std::string index_text;
    std::uint64_t seed = 0;
    std::string format;

    auto* count = app.add_subcommand("count", "Print the Catalan number C_n");
    count->add_option("--n", n, "Index n")->required();
    count->add_option("--method", method, "closed|convolution|linear|series")
        ->check(CLI::IsMember({"closed", "convolution", "linear", "series"}));

    auto* enumerate_cmd = app.add_subcommand("enumerate", "List all sequences of semilength n");
    enumerate_cmd->add_option("--n", n, "Semilength")->required();

    auto* validate_cmd = app.add_subcommand("validate", "Check a binary word");
    validate_cmd->add_option("BITS", bits)->required();

    auto* encode_cmd = app.add_subcommand("encode", "Encode a family object as a sequence");
    encode_cmd->add_option("--family", family_text)->required();
    encode_cmd->add_option("--input", input)->required();

    auto* decode_cmd = app.add_subcommand("decode", "Decode a sequence into a family object");
    decode_cmd->add_option("--family", family_text)->required();
    decode_cmd->add_option("BITS", bits)->required();

    auto* transcode_cmd = app.add_subcommand("transcode", "Convert between families");
    transcode_cmd->add_option("--from", family_text)->required();
    transcode_cmd->add_option("--to", to_text)->required();
    transcode_cmd->add_option("--input", input)->required();

    auto* rank_cmd = app.add_subcommand("rank", "Lexicographic rank of a sequence");
    rank_cmd->add_option("BITS", bits)->required();

    auto* unrank_cmd = app.add_subcommand("unrank", "Sequence at a lexicographic rank");
    unrank_cmd->add_option("--n", n)->required();
    unrank_cmd->add_option("--index", index_text)->required();

    auto* random_cmd = app.add_subcommand("random", "Uniformly random sequence");
    random_cmd->add_option("--n", n)->required();
    random_cmd->add_option("--seed", seed)->required();

    auto* render_cmd = app.add_subcommand("render", "Draw a sequence");
    render_cmd->add_option("--format", format)->required()->check(CLI::IsMember({"mountain", "dot"}));
    render_cmd->add_option("BITS", bits)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_bad_input;
    }

    try {
        if (count->parsed()) {
            big_int value;
            if (method == "closed") {
                value = catalan_closed(n);
            } else if (method == "convolution") {
                value = catalan_convolution(n);
            } else if (method == "linear") {
                value = catalan_linear(n);
            } else {
                value = catalan_series(n + 1).coefficients[n];
            }
            out << to_decimal(value) << '\n';
        } else if (enumerate_cmd->parsed()) {
            for (const auto& s : enumerate(n)) out << s.str() << '\n';
        } else if (validate_cmd->parsed()) {
            const std::size_t semilength = validate(bits).semilength();
            out << "valid semilength=" << semilength << '\n';
        } else if (encode_cmd->parsed()) {
            out << encode_family(detail::family_arg(family_text), input).str() << '\n';
        } else if (decode_cmd->parsed()) {
            out << decode_family(detail::family_arg(family_text), validate(bits)) << '\n';
        } else if (transcode_cmd->parsed()) {
            out << transcode(detail::family_arg(family_text), detail::family_arg(to_text), input)
                << '\n';
        } else if (rank_cmd->parsed()) {
            out << to_decimal(rank(validate(bits))) << '\n';
        } else if (unrank_cmd->parsed()) {
            out << unrank(n, detail::parse_decimal(index_text)).str() << '\n';
        } else if (random_cmd->parsed()) {
            out << random_uniform(n, seed).str() << '\n';
        } else if (render_cmd->parsed()) {
            const catalan_sequence s = validate(bits);
            if (format == "mountain") {
                for (const auto& line : render_mountain(s)) out << line << '\n';
            } else {
                out << render_dot(decode_tree(s));
            }
        }
    } catch (const not_in_image& e) {
        err << "domain error: " << e.what() << '\n';
        return exit_domain;
    } catch (const sequence_error& e) {
        err << "invalid sequence: " << e.what() << '\n';
        return exit_bad_input;
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return exit_bad_input;
    }
    return exit_ok;
}

} // namespace catalan
