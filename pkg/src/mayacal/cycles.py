"""Day-number conversions for the interlocking Maya calendar cycles.

A day is a non-negative count from the creation epoch (Long Count
0.0.0.0.0, the day written 13(0).0.0.0.0 4 Ahau 8 Cumku on the monuments).
From that single integer every cyclical position follows by residue:

* Tzolk'in position  ``(day + 160) % 260``
* Haab' position     ``(day + 349) % 365``
* Kawil count        ``(day + 3) % 819``
* direction-color    ``((day + 3) // 819) % 4``

Positions use the one-based convention: position ``p`` names the date at
zero-based ordinal ``(p - 1) % cycle`` of the ordered date list.  The
published residues (160 for 4 Ahau, 349 for 8 Cumku, 49 for 8 Zip, 264 for
3 Kankin) only land on the right named dates under this mapping, and it
reproduces the externally attested 13.0.0.0.0 4 Ahau 3 Kankin.
"""

from __future__ import annotations

from dataclasses import dataclass

TZOLKIN_NAMES = (
    "Imix", "Ik", "Akbal", "Kan", "Chicchan", "Cimi", "Manik", "Lamat",
    "Muluc", "Oc", "Chuen", "Eb", "Ben", "Ix", "Men", "Cib", "Caban",
    "Etznab", "Cauac", "Ahau",
)

HAAB_MONTHS = (
    "Pop", "Uo", "Zip", "Zotz", "Tzec", "Xul", "Yaxkin", "Mol", "Chen",
    "Yax", "Zac", "Ceh", "Mac", "Kankin", "Muan", "Pax", "Kayab", "Cumku",
    "Uayeb",
)

DIRECTION_COLORS = ("East-Red", "South-Yellow", "West-Black", "North-White")

TZOLKIN_DAYS = 260
HAAB_DAYS = 365
CALENDAR_ROUND = 18980  # LCM(260, 365) = 73 Tzolk'in = 52 Haab'
KAWIL_DAYS = 819
KAWIL_CYCLE = 4 * KAWIL_DAYS  # 3276, one full pass of the four direction-colors

# Long Count place values: kin, winal, tun, katun, baktun.
KIN = 1
WINAL = 20
TUN = 360
KATUN = 7200
BAKTUN = 144000
ERA = 13 * BAKTUN  # 1872000-day Maya Era

# Epoch residues: creation day is Tzolk'in position 160, Haab' position 349,
# Kawil count 3, direction-color East-Red.
TZOLKIN_EPOCH = 160
HAAB_EPOCH = 349
KAWIL_EPOCH = 3


@dataclass(frozen=True)
class TzolkinDate:
    """A date in the 260-day ritual cycle: a 1..13 number and a 20-name wheel."""

    number: int
    name_index: int

    def __post_init__(self) -> None:
        if not 1 <= self.number <= 13:
            raise ValueError(f"Tzolk'in number must be 1..13, got {self.number}")
        if not 0 <= self.name_index <= 19:
            raise ValueError(f"Tzolk'in name index must be 0..19, got {self.name_index}")

    @property
    def name(self) -> str:
        return TZOLKIN_NAMES[self.name_index]

    @property
    def ordinal(self) -> int:
        """Zero-based place in the ordered list 1 Imix .. 13 Ahau.

        Unique by CRT since gcd(13, 20) = 1: 40 = 20*2 is 1 mod 13 and
        221 = 13*17 is 1 mod 20.
        """
        return (40 * (self.number - 1) + 221 * self.name_index) % TZOLKIN_DAYS

    @property
    def position(self) -> int:
        """One-based cycle position, the inverse of :func:`tzolkin_from_pos`."""
        return (self.ordinal + 1) % TZOLKIN_DAYS

    def __str__(self) -> str:
        return f"{self.number} {self.name}"


@dataclass(frozen=True)
class HaabDate:
    """A date in the 365-day year: 18 months of 20 days plus the 5-day Uayeb."""

    day: int
    month_index: int

    def __post_init__(self) -> None:
        if not 0 <= self.month_index <= 18:
            raise ValueError(f"Haab' month index must be 0..18, got {self.month_index}")
        limit = 4 if self.month_index == 18 else 19
        if not 0 <= self.day <= limit:
            raise ValueError(
                f"Haab' day {self.day} out of range 0..{limit} for {HAAB_MONTHS[self.month_index]}"
            )

    @property
    def month_name(self) -> str:
        return HAAB_MONTHS[self.month_index]

    @property
    def ordinal(self) -> int:
        """Zero-based place in the ordered list 0 Pop .. 4 Uayeb."""
        return self.month_index * 20 + self.day

    @property
    def position(self) -> int:
        """One-based cycle position, the inverse of :func:`haab_from_pos`."""
        return (self.ordinal + 1) % HAAB_DAYS

    def __str__(self) -> str:
        return f"{self.day} {self.month_name}"


@dataclass(frozen=True)
class LongCount:
    """Mixed-radix day count: kin 1, winal 20, tun 360, katun 7200, baktun 144000.

    Baktun is unbounded (attested counts reach baktun 17 and beyond); the
    lower digits keep their radix bounds.
    """

    baktun: int
    katun: int
    tun: int
    winal: int
    kin: int

    def __post_init__(self) -> None:
        for field_name, value, limit in (
            ("baktun", self.baktun, None),
            ("katun", self.katun, 19),
            ("tun", self.tun, 19),
            ("winal", self.winal, 17),
            ("kin", self.kin, 19),
        ):
            if value < 0:
                raise ValueError(f"{field_name} must be non-negative, got {value}")
            if limit is not None and value > limit:
                raise ValueError(f"{field_name} must be <= {limit}, got {value}")

    @property
    def days(self) -> int:
        return (
            self.baktun * BAKTUN
            + self.katun * KATUN
            + self.tun * TUN
            + self.winal * WINAL
            + self.kin
        )

    def __str__(self) -> str:
        return f"{self.baktun}.{self.katun}.{self.tun}.{self.winal}.{self.kin}"


@dataclass(frozen=True)
class CycleDate:
    """The full cyclical position of one day."""

    day: int
    tzolkin: TzolkinDate
    haab: HaabDate
    tzolkin_pos: int
    haab_pos: int
    kawil: int
    direction_color: int
    long_count: LongCount

    @property
    def direction_color_name(self) -> str:
        return DIRECTION_COLORS[self.direction_color]

    @property
    def calendar_round(self) -> str:
        return f"{self.tzolkin} {self.haab}"

    def __str__(self) -> str:
        return f"{self.long_count} {self.calendar_round}"


def tzolkin_from_pos(pos: int) -> TzolkinDate:
    """Tzolk'in date at one-based cycle position ``pos`` (0..259)."""
    if not 0 <= pos < TZOLKIN_DAYS:
        raise ValueError(f"Tzolk'in position must be 0..259, got {pos}")
    ordinal = (pos + TZOLKIN_DAYS - 1) % TZOLKIN_DAYS
    return TzolkinDate(number=ordinal % 13 + 1, name_index=ordinal % 20)


def haab_from_pos(pos: int) -> HaabDate:
    """Haab' date at one-based cycle position ``pos`` (0..364)."""
    if not 0 <= pos < HAAB_DAYS:
        raise ValueError(f"Haab' position must be 0..364, got {pos}")
    ordinal = (pos + HAAB_DAYS - 1) % HAAB_DAYS
    return HaabDate(day=ordinal % 20, month_index=ordinal // 20)


def long_count_from_day(day: int) -> LongCount:
    """Canonical digit expansion of a day number (radix 20/18/20/20, open baktun)."""
    if day < 0:
        raise ValueError(f"day must be non-negative, got {day}")
    baktun, rest = divmod(day, BAKTUN)
    katun, rest = divmod(rest, KATUN)
    tun, rest = divmod(rest, TUN)
    winal, kin = divmod(rest, WINAL)
    return LongCount(baktun, katun, tun, winal, kin)


def day_from_long_count(lc: LongCount) -> int:
    """Day number of a Long Count; inverse of :func:`long_count_from_day`."""
    return lc.days


def cycle_date(day: int) -> CycleDate:
    """All cyclical positions of a day number (pre-creation days rejected)."""
    if day < 0:
        raise ValueError(f"day must be non-negative, got {day}")
    tzolkin_pos = (day + TZOLKIN_EPOCH) % TZOLKIN_DAYS
    haab_pos = (day + HAAB_EPOCH) % HAAB_DAYS
    return CycleDate(
        day=day,
        tzolkin=tzolkin_from_pos(tzolkin_pos),
        haab=haab_from_pos(haab_pos),
        tzolkin_pos=tzolkin_pos,
        haab_pos=haab_pos,
        kawil=(day + KAWIL_EPOCH) % KAWIL_DAYS,
        direction_color=((day + KAWIL_EPOCH) // KAWIL_DAYS) % 4,
        long_count=long_count_from_day(day),
    )


def calendar_round_day(tzolkin: TzolkinDate, haab: HaabDate) -> int | None:
    """Day offset in 0..18979 matching both positions, or None if unreachable.

    Only 18980 of the 260*365 position pairs occur (gcd(260, 365) = 5): the
    two residues of the day must agree mod 5.
    """
    a = (tzolkin.position - TZOLKIN_EPOCH) % TZOLKIN_DAYS
    b = (haab.position - HAAB_EPOCH) % HAAB_DAYS
    g = 5  # gcd(260, 365)
    if (a - b) % g != 0:
        return None
    # CRT for non-coprime moduli: step the 260-residue into the 365 lattice.
    step = (b - a) // g % (HAAB_DAYS // g)
    k = step * pow(TZOLKIN_DAYS // g, -1, HAAB_DAYS // g) % (HAAB_DAYS // g)
    return a + TZOLKIN_DAYS * k
