#include "corpus.hpp"

#include "sympcheck/expr.hpp"
#include "sympcheck/report.hpp"

#include <doctest.h>

using namespace sympcheck;
using Kind = Expr::Kind;

namespace {

ExprPtr atom(const char* name)
{
    return Expr::make_atom(name);
}

ErrorCode parse_error(std::string_view text)
{
    try {
        parse(text);
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InvalidArgument;
}

ErrorCode eval_error(std::string_view text)
{
    try {
        evaluate(*parse(text));
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("parse builds the expected trees")
{
    auto fam = Expr::make_binary(
        Kind::ConnSum, Expr::make_unary(Kind::Power, atom("S2"), 4),
        Expr::make_unary(Kind::IterSum, Expr::make_binary(Kind::Product, atom("S1"), atom("S7")), 3));
    CHECK(same_tree(*parse("S2^4 # CS(3, S1 x S7)"), *fam));
    CHECK(same_tree(*parse("CP2"), *atom("CP2")));
    auto thm = Expr::make_binary(Kind::ConnSum, Expr::make_unary(Kind::Spin, atom("Wu")), atom("CP3"));
    CHECK(same_tree(*parse("spin(Wu) # CP3"), *thm));
}

TEST_CASE("precedence and associativity")
{
    auto e = parse("S1 x S2 # S2 x S1");
    CHECK(e->kind == Kind::ConnSum);
    CHECK(e->left->kind == Kind::Product);
    auto chain = parse("S1 x S2 x S3");
    CHECK(chain->left->kind == Kind::Product);
    CHECK(chain->right->atom == "S3");
    auto pw = parse("S1 x S2^2");
    CHECK(pw->right->kind == Kind::Power);
    CHECK(same_tree(*parse(" S2 ^ 2#CP2 "), *parse("S2^2 # CP2")));
}

TEST_CASE("syntax errors carry positions")
{
    try {
        parse("S2 # # CP2");
        FAIL("accepted");
    } catch (const ParseError& e) {
        CHECK(e.code() == ErrorCode::SyntaxError);
        CHECK(e.position() == 5);
    }
    CHECK(parse_error("S2^0") == ErrorCode::NonPositiveExponent);
    CHECK(parse_error("CS(0, S2)") == ErrorCode::NonPositiveExponent);
    CHECK(parse_error("S2^-1") == ErrorCode::NonPositiveExponent);
    CHECK(parse_error("(S2") == ErrorCode::SyntaxError);
    CHECK(parse_error("S") == ErrorCode::SyntaxError);
    CHECK(parse_error("") == ErrorCode::SyntaxError);
    CHECK(parse_error("S2 % S2") == ErrorCode::SyntaxError);
}

TEST_CASE("round trip over the corpus")
{
    for (const auto& text : corpus::expressions) {
        auto e = parse(text);
        auto printed = print(*e);
        CHECK_MESSAGE(same_tree(*parse(printed), *e), text);
        CHECK(print(*parse(printed)) == printed);
    }
}

TEST_CASE("evaluation examples")
{
    auto m = evaluate(*parse("S2^2 # S1 x S3"));
    CHECK(euler_characteristic(m.cohomology) == 2);
    CHECK(structurally_equal(m.cohomology.algebra(), theorem21_family(1, 1).algebra()));
    CHECK(eval_error("S2 # CP2") == ErrorCode::DimensionMismatch);
    CHECK(eval_error("spin(CP2)") == ErrorCode::HypothesesNotEstablished);
    CHECK(eval_error("K3") == ErrorCode::SyntaxError);
    CHECK(eval_error("S2 # S2") == ErrorCode::DimensionTooLow);
}

TEST_CASE("evaluation errors name the failing subexpression")
{
    try {
        evaluate(*parse("CP2 # spin(S1 x S3)"));
        FAIL("accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::HypothesesNotEstablished);
        CHECK(std::string(e.what()).find("spin(S1 x S3)") != std::string::npos);
    }
}

TEST_CASE("JSON report keys and stability")
{
    auto run = [](const std::string& text) {
        return report_json(analyze_manifold(evaluate(*parse(text))), text).dump(2);
    };
    auto a = run("S2^2 # CS(3, S1 x S3)");
    CHECK(a == run("S2^2 # CS(3, S1 x S3)"));
    auto doc = nlohmann::json::parse(a);
    for (const char* key : {"input", "dimension", "betti", "chi", "sigma_abs", "symplectic_witness", "hirzebruch",
                            "unimodality", "spin_c", "verdict", "trace"})
        CHECK_MESSAGE(doc.contains(key), key);
    CHECK(doc["chi"] == -2);
    CHECK(doc["sigma_abs"] == 0);
    CHECK(doc["hirzebruch"] == "fail");
    CHECK(doc["verdict"] == "not-realizable-by-almost-complex");

    auto cp2 = nlohmann::json::parse(run("CP2"));
    CHECK(cp2["verdict"] == "no-obstruction-found");
    auto s4 = nlohmann::json::parse(run("S4"));
    CHECK(s4["symplectic_witness"].is_null());
}
