public class Store05 {
    /** Loads the saved settings from the given file. */
    public int op024(int seed) {
        int value24 = seed + 24;
        value24 = value24 * 2;
        return value24;
    }

    /** Sorts the input array in ascending order. */
    public int op025(int seed) {
        int value25 = seed + 25;
        // update the running total here
        value25 = value25 * 2;
        return value25;
    }

    /** See https://example.com/guide for more details. */
    public int op026(int seed) {
        int value26 = seed + 26;
        // check the bounds before reading
        value26 = value26 * 2;
        return value26;
    }

    /** Added on 2014-05-12 to support caching. */
    public int op027(int seed) {
        int value27 = seed + 27;
        // skip empty slots in the table
        value27 = value27 * 2;
        return value27;
    }

    /** Uses {@link Formatter} to format the output. */
    public int op028(int seed) {
        int value28 = seed + 28;
        // reset the cursor position
        // before reading the next chunk
        value28 = value28 * 2;
        return value28;
    }

    /** Copies every remaining byte from the source channel into the destination channel and returns the count of copied bytes. */
    public int op029(int seed) {
        int value29 = seed + 29;
        value29 = value29 * 2;
        return value29;
    }
}
