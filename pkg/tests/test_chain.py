import math
import unittest

from chaincert.arith import primes_below
from chaincert.chain import (
    LinearMap,
    apply,
    as_rooted_chain,
    complete_chain,
    geometric_sum,
    geometric_sum_mod,
    inverse,
    inverse_iterate,
    iterate,
    iterate_mod,
    rooted_chain,
)
from chaincert.errors import (
    CoefficientsNotCoprime,
    InvalidMapError,
    MultiplierTooSmall,
    NotPrime,
    OffsetNotPositive,
)
from chaincert.sequence import s_term

from .constants import (
    COMPLETE_FROM_11,
    COMPLETE_FROM_41,
    GRID,
    ROOT_1_ELEMENTS,
    ROOT_1_TERMINATOR,
    ROOT_32_ELEMENTS,
    ROOT_32_TERMINATOR,
)


class LinearMapTest(unittest.TestCase):

    def test_valid_map(self):
        """Test a valid map evaluates and prints"""
        f = LinearMap(2, 3)
        self.assertEqual(str(f), "2z+3")
        self.assertEqual(f(32), 67)
        self.assertEqual(apply(f, 32), 67)

    def test_invalid_maps(self):
        """Test every invalid coefficient pair is rejected with its own error"""
        cases = [
            ((1, 3), MultiplierTooSmall),
            ((0, 1), MultiplierTooSmall),
            ((2, 0), OffsetNotPositive),
            ((2, -1), OffsetNotPositive),
            ((2, 4), CoefficientsNotCoprime),
            ((6, 9), CoefficientsNotCoprime),
        ]
        for (a, b), error in cases:
            with self.assertRaises(error, msg=f"Failed for a={a}, b={b}"):
                LinearMap(a, b)
            with self.assertRaises(InvalidMapError):
                LinearMap(a, b)

    def test_coprime_divisor_reported(self):
        """Test the shared divisor is attached to the error"""
        with self.assertRaises(CoefficientsNotCoprime) as ctx:
            LinearMap(6, 9)
        self.assertEqual(ctx.exception.divisor, 3)
        self.assertEqual(ctx.exception.code, "coefficients_not_coprime")


class IterationTest(unittest.TestCase):

    def test_iterate_closed_form(self):
        """Test the closed form against repeated application"""
        for a, b in GRID:
            f = LinearMap(a, b)
            for z in (1, 2, 17, 100):
                x = z
                for n in range(12):
                    self.assertEqual(iterate(f, z, n), x)
                    x = apply(f, x)

    def test_root_32(self):
        """Test f^7(32) = 4477 for 2z + 3"""
        self.assertEqual(iterate(LinearMap(2, 3), 32, 7), ROOT_32_TERMINATOR)
        self.assertEqual(iterate(LinearMap(2, 3), 32, 0), 32)

    def test_iterate_mod(self):
        """Test modular iteration including moduli sharing factors with a - 1"""
        for a, b in GRID:
            f = LinearMap(a, b)
            for m in (2, 3, 4, 5, 8, 9, 11, 25, 27, 64, 97):
                for z in (1, 7, 32):
                    for n in (0, 1, 2, 5, 13, 30):
                        self.assertEqual(
                            iterate_mod(f, z, n, m),
                            iterate(f, z, n) % m,
                            f"Failed for f={f}, z={z}, n={n}, m={m}",
                        )

    def test_iterate_mod_large_exponent(self):
        """Test modular iteration with an exponent far beyond direct iteration"""
        f = LinearMap(2, 3)
        n = 10**18
        # f^n(z) = 2^n (z + 3) - 3
        expected = (pow(2, n, 1000003) * 35 - 3) % 1000003
        self.assertEqual(iterate_mod(f, 32, n, 1000003), expected)

    def test_geometric_sum_mod(self):
        """Test the modular geometric sum when a - 1 is not invertible"""
        for a in (3, 5, 9):
            for m in (2, 4, 8, 16, 6):
                for n in range(20):
                    self.assertEqual(geometric_sum_mod(a, n, m), geometric_sum(a, n) % m)

    def test_invalid_iteration_arguments(self):
        """Test negative exponents and tiny moduli are rejected"""
        f = LinearMap(2, 3)
        with self.assertRaises(ValueError):
            iterate(f, 1, -1)
        with self.assertRaises(ValueError):
            iterate_mod(f, 1, 1, 1)

    def test_inverse(self):
        """Test preimages that are and are not positive integers"""
        f = LinearMap(2, 3)
        self.assertEqual(inverse(f, 67), 32)
        self.assertIsNone(inverse(f, 4))
        self.assertIsNone(inverse(f, 3))
        self.assertIsNone(inverse(f, 2))
        self.assertEqual(inverse(LinearMap(2, 1), 5), 2)
        self.assertIsNone(inverse(LinearMap(2, 1), 2))

    def test_inverse_identity(self):
        """Test f^-n(z) = s_n / a^n whenever the preimage exists"""
        for a, b in GRID:
            f = LinearMap(a, b)
            for w in (1, 2, 10, 33):
                for n in range(1, 6):
                    z = iterate(f, w, n)
                    self.assertEqual(inverse_iterate(f, z, n), w)
                    self.assertEqual(s_term(f, z, n), w * a**n)

    def test_inverse_iterate_missing(self):
        """Test the inverse iterate vanishes once a preimage leaves the naturals"""
        self.assertIsNone(inverse_iterate(LinearMap(2, 3), 32, 1))
        self.assertEqual(inverse_iterate(LinearMap(2, 3), 32, 0), 32)


class RootedChainTest(unittest.TestCase):

    def test_root_32(self):
        """Test the rooted chain of 32 under 2z + 3"""
        chain = rooted_chain(LinearMap(2, 3), 32)
        self.assertEqual(chain.elements, ROOT_32_ELEMENTS)
        self.assertEqual(chain.length, 6)
        self.assertEqual(chain.terminator, ROOT_32_TERMINATOR)
        self.assertFalse(chain.truncated)

    def test_root_1(self):
        """Test the rooted chain of 1 under 2z + 3"""
        chain = rooted_chain(LinearMap(2, 3), 1)
        self.assertEqual(chain.elements, ROOT_1_ELEMENTS)
        self.assertEqual(chain.terminator, ROOT_1_TERMINATOR)

    def test_shared_factor_root(self):
        """Test a root sharing a factor with b has an empty chain"""
        chain = rooted_chain(LinearMap(2, 3), 21)
        self.assertEqual(chain.length, 0)
        self.assertEqual(chain.terminator, 45)
        self.assertIsNone(chain.first_element)
        self.assertIsNone(chain.last_element)

    def test_shared_factor_grid(self):
        """Test every grid root sharing a factor with b has an empty chain"""
        for a, b in GRID:
            f = LinearMap(a, b)
            for z in range(1, 301):
                d = math.gcd(z, b)
                if d == 1:
                    continue
                chain = rooted_chain(f, z)
                self.assertEqual(chain.length, 0, f"Failed for f={f}, z={z}")
                self.assertEqual(chain.terminator, a * z + b)
                # d divides az + b and is smaller than it
                self.assertEqual(chain.terminator % d, 0)
                self.assertGreater(chain.terminator, d)

    def test_immediate_composite(self):
        """Test a root whose image is composite"""
        chain = rooted_chain(LinearMap(2, 1), 4)
        self.assertEqual(chain.length, 0)
        self.assertEqual(chain.terminator, 9)

    def test_truncation(self):
        """Test a chain stopped at max_steps has no terminator"""
        chain = rooted_chain(LinearMap(2, 3), 32, max_steps=3)
        self.assertEqual(chain.elements, ROOT_32_ELEMENTS[:3])
        self.assertTrue(chain.truncated)
        self.assertIsNone(chain.terminator)

    def test_exact_length_is_not_truncated(self):
        """Test a chain reaching max_steps right before its composite"""
        chain = rooted_chain(LinearMap(2, 3), 32, max_steps=6)
        self.assertTrue(chain.truncated)
        chain = rooted_chain(LinearMap(2, 3), 32, max_steps=7)
        self.assertFalse(chain.truncated)
        self.assertEqual(chain.terminator, ROOT_32_TERMINATOR)

    def test_invalid_arguments(self):
        """Test roots and step limits below 1 are rejected"""
        with self.assertRaises(ValueError):
            rooted_chain(LinearMap(2, 3), 0)
        with self.assertRaises(ValueError):
            rooted_chain(LinearMap(2, 3), 5, max_steps=0)


class CompleteChainTest(unittest.TestCase):

    def test_complete_from_middle(self):
        """Test the complete chain through 11 under 2z + 1"""
        chain = complete_chain(LinearMap(2, 1), 11)
        self.assertEqual(chain.elements, COMPLETE_FROM_11)
        self.assertEqual(chain.lambda_, 5)

    def test_complete_from_head(self):
        """Test the complete chain through 41 under 2z + 1"""
        chain = complete_chain(LinearMap(2, 1), 41)
        self.assertEqual(chain.elements, COMPLETE_FROM_41)
        self.assertEqual(chain.lambda_, 3)
        self.assertEqual(chain.head, 41)
        self.assertEqual(chain.last, 167)

    def test_same_chain_from_any_member(self):
        """Test every member of a complete chain gives the same chain"""
        f = LinearMap(2, 1)
        for p in COMPLETE_FROM_11:
            self.assertEqual(complete_chain(f, p).elements, COMPLETE_FROM_11)

    def test_composite_rejected(self):
        """Test a composite start is rejected"""
        with self.assertRaises(NotPrime):
            complete_chain(LinearMap(2, 1), 9)

    def test_as_rooted_chain(self):
        """Test a complete chain seen as the rooted chain of its head's preimage"""
        f = LinearMap(2, 1)
        rooted = as_rooted_chain(complete_chain(f, 41))
        self.assertEqual(rooted.root, 20)
        self.assertEqual(rooted.elements, COMPLETE_FROM_41)
        self.assertEqual(rooted.terminator, 335)
        self.assertEqual(rooted, rooted_chain(f, 20))

    def test_as_rooted_chain_without_preimage(self):
        """Test the chain headed by 2 has no root"""
        self.assertIsNone(as_rooted_chain(complete_chain(LinearMap(2, 1), 11)))

    def test_fermat_bound(self):
        """Test the head alone bounds the chain length"""
        self.assertEqual(complete_chain(LinearMap(2, 1), 41).fermat_bound, 40)
        self.assertIsNone(complete_chain(LinearMap(2, 1), 11).fermat_bound)
        self.assertEqual(complete_chain(LinearMap(4, 1), 3).fermat_bound, 3)

    def test_fermat_bound_grid(self):
        """Test lambda never exceeds the bound from the head"""
        for a, b in GRID:
            f = LinearMap(a, b)
            for p in primes_below(1000):
                chain = complete_chain(f, p)
                bound = chain.fermat_bound
                if bound is None:
                    self.assertEqual(a % chain.head, 0)
                    continue
                self.assertLessEqual(chain.lambda_, bound, f"Failed for f={f}, p={p}")


if __name__ == "__main__":
    unittest.main()
