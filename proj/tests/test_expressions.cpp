#include "catalan/counting.hpp"
#include "catalan/expressions.hpp"
#include "catalan/sequence.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>

using namespace catalan;

namespace {

const extended_tree a = extended_tree::leaf();
extended_tree mul(const extended_tree& l, const extended_tree& r) { return extended_tree::join(l, r); }

parse_error rpn_error(const std::string& text) {
    try {
        parse_rpn(text);
    } catch (const parse_error& e) {
        return e;
    }
    FAIL("expected a parse_error for " << text);
    throw;
}

} // namespace

TEST_CASE("multiplication text") {
    CHECK(parse_mult("a") == a);
    CHECK(parse_mult("(a*a)") == mul(a, a));
    const auto paper = mul(a, mul(mul(a, a), a));
    CHECK(parse_mult("(a*((a*a)*a))") == paper);
    CHECK(render_mult(paper) == "(a*((a*a)*a))");

    for (const char* bad : {"", "b", "(a*a", "(a a)", "a*a", "(a*a))", "((a)*a)", "(*a)"}) {
        INFO(bad);
        CHECK_THROWS_AS(parse_mult(bad), parse_error);
    }
}

TEST_CASE("rpn text") {
    CHECK(parse_rpn("a") == a);
    CHECK(parse_rpn("aa*") == mul(a, a));
    CHECK(parse_rpn("aaa*a**") == parse_mult("(a*((a*a)*a))"));
    CHECK(render_rpn(parse_mult("(a*((a*a)*a))")) == "aaa*a**");

    auto e = rpn_error("a*");
    CHECK(e.fault() == parse_fault::stack_underflow);
    CHECK(e.position() == 2);
    e = rpn_error("aa");
    CHECK(e.fault() == parse_fault::excess_operands);
    e = rpn_error("");
    CHECK(e.fault() == parse_fault::syntax);
    e = rpn_error("aa+");
    CHECK(e.fault() == parse_fault::syntax);
    CHECK(e.position() == 3);
}

TEST_CASE("text forms round trip through every expression with <= 8 operators") {
    for (std::size_t n = 0; n <= 8; ++n) {
        for (const auto& s : enumerate(n)) {
            const extended_tree e = decode_expression(s);
            REQUIRE(parse_mult(render_mult(e)) == e);
            REQUIRE(parse_rpn(render_rpn(e)) == e);
        }
    }
}

TEST_CASE("expression codec") {
    CHECK(encode_expression(a).str() == "");
    CHECK(encode_expression(parse_mult("(a*a)")).str() == "01");
    CHECK(encode_expression(parse_mult("(a*((a*a)*a))")).str() == "010011");

    CHECK(decode_expression(validate("")) == a);
    CHECK(decode_expression(validate("01")) == mul(a, a));
    const extended_tree fig7 = decode_expression(validate("00010111"));
    CHECK(fig7.leaf_count() == 5);
    CHECK(render_mult(fig7) == "((a*(a*a))*(a*a))");

    for (std::size_t n = 0; n <= 8; ++n) {
        for (const auto& s : enumerate(n)) {
            const extended_tree e = decode_expression(s);
            REQUIRE(e.internal_count() == n);
            REQUIRE(encode_expression(e) == s);
        }
    }
}

TEST_CASE("postfix append-1 codec") {
    CHECK(rpn_paper_encode(a).str() == "01");
    CHECK(rpn_paper_encode(mul(a, a)).str() == "0011");
    CHECK(rpn_paper_encode(parse_rpn("aaa*a**")).str() == "00010111");

    CHECK(rpn_paper_decode(validate("01")) == a);
    CHECK(render_rpn(rpn_paper_decode(validate("00010111"))) == "aaa*a**");
    CHECK_THROWS_AS(rpn_paper_decode(validate("010011")), not_in_image);
    CHECK_THROWS_AS(rpn_paper_decode(validate("")), not_in_image);
}

TEST_CASE("postfix append-1 image has C_(n-1) members of semilength n") {
    for (std::size_t n = 1; n <= 8; ++n) {
        std::size_t decodable = 0;
        for (const auto& s : enumerate(n)) {
            bool in_image = false;
            try {
                const extended_tree e = rpn_paper_decode(s);
                REQUIRE(e.leaf_count() == n);
                REQUIRE(rpn_paper_encode(e) == s);
                in_image = true;
            } catch (const not_in_image&) {
            }
            // The image is {0 u 1 : u a Catalan sequence of semilength n - 1}.
            const std::string inner = s.str().substr(1, s.size() - 2);
            bool inner_valid = true;
            try {
                validate(inner);
            } catch (const sequence_error&) {
                inner_valid = false;
            }
            REQUIRE(in_image == inner_valid);
            decodable += in_image;
        }
        CHECK(decodable == catalan_closed(n - 1));
    }
}

TEST_CASE("the two expression codecs differ") {
    const extended_tree e = parse_rpn("aaa*a**");
    CHECK(encode_expression(e).str() == "010011");
    CHECK(rpn_paper_encode(e).str() == "00010111");
}

TEST_CASE("deep expressions") {
    std::string text = "a";
    for (int i = 0; i < 10000; ++i) text += "a*";
    const extended_tree e = parse_rpn(text);
    CHECK(e.internal_count() == 10000);
    CHECK(render_rpn(e) == text);
    CHECK(parse_mult(render_mult(e)) == e);
    CHECK(decode_expression(encode_expression(e)) == e);
}
