public class Store36 {
    /** TODO rewrite this slow path later. */
    public int satdOnly(int seed) {
        return seed + 9001;
    }

    /** Returns the naïve count of items. */
    public int asciiOnly(int seed) {
        return seed + 9002;
    }

    public int codeOnly(int seed) {
        // int cached = computeValue(seed);
        return seed + 9003;
    }

    public int orphanOnly(int seed) {
        int held9004 = seed;

        // drop stale references from the pool

        return held9004;
    }

    /** ok done */
    public int shortOnly(int seed) {
        return seed + 9005;
    }

    /** Returns the number of stored elements. */
    public int hugeOnly(int seed) {
        seed = seed + 0 * 1 + 2;
        seed = seed + 1 * 2 + 3;
        seed = seed + 2 * 3 + 4;
        seed = seed + 3 * 4 + 5;
        seed = seed + 4 * 5 + 6;
        seed = seed + 5 * 6 + 7;
        seed = seed + 6 * 7 + 8;
        seed = seed + 7 * 8 + 9;
        seed = seed + 8 * 9 + 10;
        seed = seed + 9 * 10 + 11;
        seed = seed + 10 * 11 + 12;
        seed = seed + 11 * 12 + 13;
        seed = seed + 12 * 13 + 14;
        seed = seed + 13 * 14 + 15;
        seed = seed + 14 * 15 + 16;
        seed = seed + 15 * 16 + 17;
        seed = seed + 16 * 17 + 18;
        seed = seed + 17 * 18 + 19;
        seed = seed + 18 * 19 + 20;
        seed = seed + 19 * 20 + 21;
        seed = seed + 20 * 21 + 22;
        seed = seed + 21 * 22 + 23;
        seed = seed + 22 * 23 + 24;
        seed = seed + 23 * 24 + 25;
        seed = seed + 24 * 25 + 26;
        seed = seed + 25 * 26 + 27;
        seed = seed + 26 * 27 + 28;
        seed = seed + 27 * 28 + 29;
        seed = seed + 28 * 29 + 30;
        seed = seed + 29 * 30 + 31;
        seed = seed + 30 * 31 + 32;
        seed = seed + 31 * 32 + 33;
        seed = seed + 32 * 33 + 34;
        seed = seed + 33 * 34 + 35;
        seed = seed + 34 * 35 + 36;
        seed = seed + 35 * 36 + 37;
        seed = seed + 36 * 37 + 38;
        seed = seed + 37 * 38 + 39;
        seed = seed + 38 * 39 + 40;
        seed = seed + 39 * 40 + 41;
        seed = seed + 40 * 41 + 42;
        seed = seed + 41 * 42 + 43;
        seed = seed + 42 * 43 + 44;
        seed = seed + 43 * 44 + 45;
        seed = seed + 44 * 45 + 46;
        seed = seed + 45 * 46 + 47;
        seed = seed + 46 * 47 + 48;
        seed = seed + 47 * 48 + 49;
        seed = seed + 48 * 49 + 50;
        seed = seed + 49 * 50 + 51;
        seed = seed + 50 * 51 + 52;
        seed = seed + 51 * 52 + 53;
        seed = seed + 52 * 53 + 54;
        seed = seed + 53 * 54 + 55;
        seed = seed + 54 * 55 + 56;
        seed = seed + 55 * 56 + 57;
        seed = seed + 56 * 57 + 58;
        seed = seed + 57 * 58 + 59;
        seed = seed + 58 * 59 + 60;
        seed = seed + 59 * 60 + 61;
        return seed;
    }

    /** Returns the number of stored elements. */
    public int op000(int seed) {
        int value0 = seed + 0;
        // update the running total here
        value0 = value0 * 2;
        return value0;
    }
}
