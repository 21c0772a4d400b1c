#include "catalan/cli.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace {

struct run_result {
    int code;
    std::string out;
    std::string err;
};

run_result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = catalan::cli_main(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("count") {
    CHECK(run({"count", "--n", "3"}).out == "5\n");
    CHECK(run({"count", "--n", "10", "--method", "series"}).out == "16796\n");
    for (const char* method : {"closed", "convolution", "linear", "series"}) {
        CHECK(run({"count", "--n", "300", "--method", method}).out ==
              run({"count", "--n", "300"}).out);
    }
    CHECK(run({"count", "--n", "3", "--method", "guess"}).code == 1);
    CHECK(run({"count"}).code == 1);
}

TEST_CASE("enumerate and validate") {
    CHECK(run({"enumerate", "--n", "3"}).out == "000111\n001011\n001101\n010011\n010101\n");
    CHECK(run({"enumerate", "--n", "0"}).out == "\n");
    CHECK(run({"enumerate", "--n", "17"}).code == 1);

    CHECK(run({"validate", "001011"}).out == "valid semilength=3\n");
    CHECK(run({"validate", ""}).out == "valid semilength=0\n");
    const auto bad = run({"validate", "0110"});
    CHECK(bad.code == 1);
    CHECK(bad.out.empty());
    CHECK(bad.err.find("position 3") != std::string::npos);
}

TEST_CASE("encode, decode, transcode") {
    CHECK(run({"encode", "--family", "rpn-paper", "--input", "aaa*a**"}).out == "00010111\n");
    CHECK(run({"encode", "--family", "votes", "--input", "++-+--"}).out == "001011\n");
    CHECK(run({"decode", "--family", "tree", "00010111"}).out == "((. (. .)) (. .))\n");
    CHECK(run({"decode", "--family", "rpn-paper", "00010111"}).out == "aaa*a**\n");

    const auto outside = run({"decode", "--family", "rpn-paper", "010011"});
    CHECK(outside.code == 2);
    CHECK(outside.out.empty());
    CHECK_FALSE(outside.err.empty());

    CHECK(run({"transcode", "--from", "pm", "--to", "path", "--input", "+++---"}).out ==
          "HHHVVV\n");
    CHECK(run({"transcode", "--from", "tree", "--to", "chords", "--input", "((. (. .)) (. .))"})
              .out == "1-8,2-7,3-4,5-6\n");
    CHECK(run({"decode", "--family", "frieze", "01"}).code == 1);
    CHECK(run({"decode", "--family", "tree", "10"}).code == 1);
    CHECK(run({"encode", "--family", "chords", "--input", "1-3,2-4"}).code == 1);
}

TEST_CASE("rank, unrank, random") {
    CHECK(run({"rank", "010101"}).out == "4\n");
    CHECK(run({"unrank", "--n", "3", "--index", "2"}).out == "001101\n");
    CHECK(run({"unrank", "--n", "3", "--index", "5"}).code == 1);
    CHECK(run({"unrank", "--n", "3", "--index", "-1"}).code == 1);
    const auto r = run({"random", "--n", "20", "--seed", "7"});
    CHECK(r.code == 0);
    CHECK(r.out.size() == 41);
    CHECK(run({"random", "--n", "20", "--seed", "7"}).out == r.out);
}

TEST_CASE("render") {
    CHECK(run({"render", "--format", "mountain", "0011"}).out == " /\\\n/  \\\n");
    CHECK(run({"render", "--format", "dot", "01"}).out == "digraph tree {\n  v0;\n}\n");
    CHECK(run({"render", "--format", "svg", "01"}).code == 1);
}

TEST_CASE("help exits cleanly") {
    const auto help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("transcode") != std::string::npos);
}
