public class Store29 {
    /** Loads the saved settings from the given file. */
    public int op168(int seed) {
        int value168 = seed + 168;
        // reset the cursor position
        // before reading the next chunk
        value168 = value168 * 2;
        return value168;
    }

    /** Sorts the input array in ascending order. */
    public int op169(int seed) {
        int value169 = seed + 169;
        value169 = value169 * 2;
        return value169;
    }

    /** See https://example.com/guide for more details. */
    public int op170(int seed) {
        int value170 = seed + 170;
        // update the running total here
        value170 = value170 * 2;
        return value170;
    }

    /** Added on 2014-05-12 to support caching. */
    public int op171(int seed) {
        int value171 = seed + 171;
        // check the bounds before reading
        value171 = value171 * 2;
        return value171;
    }

    /** Uses {@link Formatter} to format the output. */
    public int op172(int seed) {
        int value172 = seed + 172;
        // skip empty slots in the table
        value172 = value172 * 2;
        return value172;
    }

    /** Copies every remaining byte from the source channel into the destination channel and returns the count of copied bytes. */
    public int op173(int seed) {
        int value173 = seed + 173;
        // reset the cursor position
        // before reading the next chunk
        value173 = value173 * 2;
        return value173;
    }
}
