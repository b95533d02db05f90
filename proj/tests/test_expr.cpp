#include <gtest/gtest.h>

#include <hlpk/expr.hpp>
#include <hlpk/pieri.hpp>
#include <hlpk/serialize.hpp>

using namespace hlpk;

namespace {

const Engine& engine() { return shared_engine(); }

SymFunc ev(const std::string& text) { return parse_expr(text, engine()); }

SymFunc in_p(const SymFunc& f) { return engine().convert(f, Basis::p); }

}  // namespace

TEST(Expr, BasisAtoms) {
  const Engine& E = engine();
  EXPECT_EQ(ev("P[2,1]"), in_p(E.basis_element(Basis::P, Partition({2, 1}))));
  EXPECT_EQ(ev("Q[2]"), in_p(E.basis_element(Basis::Q, Partition{2})));
  EXPECT_EQ(ev("m[2,2]"), in_p(E.basis_element(Basis::m, Partition({2, 2}))));
  EXPECT_EQ(ev("s[3,1]"), in_p(E.basis_element(Basis::s, Partition({3, 1}))));
  EXPECT_EQ(ev("p[4]"), E.basis_element(Basis::p, Partition{4}));
  EXPECT_EQ(ev("e[3]"), in_p(E.e_element(3)));
  EXPECT_EQ(ev("q[2]"), in_p(E.q_element(2)));
  EXPECT_EQ(ev("skewP[2,1/1]"), in_p(E.skew_P(Partition({2, 1}), Partition{1})));
  EXPECT_EQ(ev("P[-]"), SymFunc::unit(Basis::p));
  EXPECT_EQ(ev("skewP[2,1/-]"), in_p(E.basis_element(Basis::P, Partition({2, 1}))));
  // s_1 = e_1 = p_1 and q_1 = (1-t) p_1
  EXPECT_EQ(ev("s[1]"), ev("e[1]"));
  EXPECT_EQ(ev("s[1]"), ev("p[1]"));
  EXPECT_EQ(ev("q[1]"), ev("(1-t)*p[1]"));
}

TEST(Expr, ScalarArithmetic) {
  SymFunc one = SymFunc::unit(Basis::p);
  EXPECT_EQ(ev("3"), one.scaled(RatFunc(3)));
  EXPECT_EQ(ev("1+2"), one.scaled(RatFunc(3)));
  EXPECT_EQ(ev("-t"), one.scaled(RatFunc(-IntPoly::t())));
  EXPECT_EQ(ev("t^3"), one.scaled(RatFunc(IntPoly::monomial(1, 3))));
  EXPECT_EQ(ev("t^0"), one);
  // precedence: * binds tighter than -, ^ tighter than unary -
  EXPECT_EQ(ev("1-t*t"), ev("1-t^2"));
  EXPECT_EQ(ev("-t^2"), one.scaled(RatFunc(-IntPoly::monomial(1, 2))));
  EXPECT_EQ(ev("(1-t)^2"), ev("1-2*t+t^2"));
  EXPECT_EQ(ev("2*3"), one.scaled(RatFunc(6)));
}

TEST(Expr, RingOps) {
  const Engine& E = engine();
  EXPECT_EQ(ev("P[1]^2"),
            E.multiply(ev("P[1]"), ev("P[1]")));
  EXPECT_EQ(ev("P[1]*P[1]"), ev("P[2] + (1+t)*P[1,1]"));
  EXPECT_EQ(ev("P[1]^2 - P[2]"), ev("(1+t)*P[1,1]"));
  EXPECT_EQ(ev("- P[1] + P[1]"), SymFunc(Basis::p));
  EXPECT_EQ(ev("P[2,1]*q[2]"),
            in_p(E.multiply(E.basis_element(Basis::P, Partition({2, 1})),
                            E.q_element(2))));
  // whitespace is free
  EXPECT_EQ(ev("  ( 1 - t ) * p[ 1 ]  "), ev("(1-t)*p[1]"));
}

TEST(Expr, Errors) {
  EXPECT_THROW(ev(""), std::invalid_argument);
  EXPECT_THROW(ev("P[1,2]"), std::invalid_argument);   // not weakly decreasing
  EXPECT_THROW(ev("P[0]"), std::invalid_argument);     // parts are positive
  EXPECT_THROW(ev("P[2"), std::invalid_argument);      // unterminated bracket
  EXPECT_THROW(ev("P[]"), std::invalid_argument);      // '-' spells empty
  EXPECT_THROW(ev("foo[1]"), std::invalid_argument);   // unknown name
  EXPECT_THROW(ev("t t"), std::invalid_argument);      // trailing input
  EXPECT_THROW(ev("P[1]*"), std::invalid_argument);    // dangling operator
  EXPECT_THROW(ev("e[-]"), std::invalid_argument);     // degree is an integer
  EXPECT_THROW(ev("skewP[2,1]"), std::invalid_argument);  // missing '/'
  EXPECT_THROW(ev("P[1]^t"), std::invalid_argument);   // exponent is a literal
  EXPECT_THROW(ev("(1-t"), std::invalid_argument);     // unbalanced paren
  try {
    ev("P[1] @");
    FAIL() << "expected a parse error";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("position"), std::string::npos);
  }
}

TEST(Serialize, PolyRoundTrip) {
  IntPoly p = IntPoly(1) - IntPoly::t();  // 1 - t
  Json j = poly_json(p);
  EXPECT_EQ(j.dump(), R"(["1","-1"])");
  EXPECT_EQ(poly_from_json(j), p);

  EXPECT_EQ(poly_json(IntPoly()).dump(), "[]");
  EXPECT_EQ(poly_from_json(Json::array()), IntPoly());

  // big coefficients survive as decimal strings
  mpz_class big("123456789012345678901234567890");
  IntPoly q = IntPoly::monomial(big, 2);
  Json jq = Json::parse(poly_json(q).dump());
  EXPECT_EQ(poly_from_json(jq), q);

  EXPECT_THROW(poly_from_json(Json{{"a", 1}}), std::invalid_argument);
}

TEST(Serialize, RatFuncRoundTrip) {
  RatFunc z = z_t(Partition({2, 2}));
  Json j = ratfunc_json(z);
  EXPECT_EQ(ratfunc_from_json(j), z);
  EXPECT_EQ(j.at("num"), poly_json(z.num()));
  EXPECT_EQ(j.at("den"), poly_json(z.den()));
}

TEST(Serialize, PartitionRoundTrip) {
  Partition lam({4, 3, 3, 1});
  Json j = partition_json(lam);
  EXPECT_EQ(j.dump(), "[4,3,3,1]");
  EXPECT_EQ(partition_from_json(j), lam);
  EXPECT_EQ(partition_json(Partition()).dump(), "[]");
  EXPECT_THROW(partition_from_json(Json::parse("[1,2]")),
               std::invalid_argument);
  EXPECT_THROW(partition_from_json(Json::parse("[2,-1]")),
               std::invalid_argument);
  // trailing zeros normalize away, matching the constructor
  EXPECT_EQ(partition_from_json(Json::parse("[1,0]")), Partition{1});
}

TEST(Serialize, SymFuncRoundTrip) {
  const Engine& E = engine();
  SymFunc f = E.convert(E.basis_element(Basis::s, Partition({2, 1})), Basis::P);
  Json j = symfunc_json(f);
  EXPECT_EQ(j.at("basis"), "P");
  ASSERT_EQ(j.at("terms").size(), f.terms().size());
  EXPECT_EQ(symfunc_from_json(j), f);
  // terms arrive in canonical partition order
  EXPECT_EQ(j.at("terms").at(0).at("partition").dump(), "[2,1]");

  SymFunc zero(Basis::m);
  EXPECT_EQ(symfunc_from_json(symfunc_json(zero)), zero);
}
