public class Store13 {
    /** Loads the saved settings from the given file. */
    public int op072(int seed) {
        int value72 = seed + 72;
        // skip empty slots in the table
        value72 = value72 * 2;
        return value72;
    }

    /** Sorts the input array in ascending order. */
    public int op073(int seed) {
        int value73 = seed + 73;
        // reset the cursor position
        // before reading the next chunk
        value73 = value73 * 2;
        return value73;
    }

    /** See https://example.com/guide for more details. */
    public int op074(int seed) {
        int value74 = seed + 74;
        value74 = value74 * 2;
        return value74;
    }

    /** Added on 2014-05-12 to support caching. */
    public int op075(int seed) {
        int value75 = seed + 75;
        // update the running total here
        value75 = value75 * 2;
        return value75;
    }

    /** Uses {@link Formatter} to format the output. */
    public int op076(int seed) {
        int value76 = seed + 76;
        // check the bounds before reading
        value76 = value76 * 2;
        return value76;
    }

    /** Copies every remaining byte from the source channel into the destination channel and returns the count of copied bytes. */
    public int op077(int seed) {
        int value77 = seed + 77;
        // skip empty slots in the table
        value77 = value77 * 2;
        return value77;
    }
}
